"""Vector-level inequalities checked directly on concrete vectors.

The inner product is linear in its first argument: ``<x, y> = sum x_i conj(y_i)``.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import DimensionMismatchError, InvalidMatrixError
from ..linalg import as_matrix, as_vector, matrix_abs
from .approx import Approx
from .evaluate import BoundReport, LinkResult, check_link, combine_status, inputs_digest
from .registry import LE

VECTOR_TOL = 1e-12
UNIT_TOL = 1e-12


def inner(x: np.ndarray, y: np.ndarray) -> complex:
    return complex(np.vdot(y, x))


def _vectors(*vs):
    out = [as_vector(v) for v in vs]
    n = out[0].shape[0]
    for v in out[1:]:
        if v.shape[0] != n:
            raise DimensionMismatchError("vectors have different lengths")
    return out


def _report(rid, names, values, ops, tol, arrays) -> BoundReport:
    vals = [Approx.of(v) for v in values]
    links = []
    for i, op in enumerate(ops):
        slack, allowance, acc, status = check_link(vals[i], op, vals[i + 1], tol, tol)
        links.append(LinkResult(names[i], op, names[i + 1], slack, allowance, acc, status))
    return BoundReport(
        relation_id=rid,
        term_values=tuple((n, v.value) for n, v in zip(names, vals)),
        term_errors=tuple(v.err for v in vals),
        links=tuple(links),
        slack=min(link.slack for link in links),
        status=combine_status(link.status for link in links),
        tolerance_used=tol,
        eq_tolerance_used=tol,
        inputs_digest=inputs_digest(arrays),
    )


def check_generalized_cauchy_schwarz(x, y, z, tol: float = VECTOR_TOL) -> BoundReport:
    """|<x,y>|^2 + |<x,z>|^2 <= ||x|| ||<x,y>y + <x,z>z|| <= ||x|| sqrt(radical)

    where radical = |<x,y>|^2||y||^2 + |<x,z>|^2||z||^2 + 2|<x,y>||<x,z>||<y,z>|.
    """
    x, y, z = _vectors(x, y, z)
    xy, xz, yz = inner(x, y), inner(x, z), inner(y, z)
    nx, ny, nz = (float(np.linalg.norm(v)) for v in (x, y, z))
    lhs = abs(xy) ** 2 + abs(xz) ** 2
    mid = nx * float(np.linalg.norm(xy * y + xz * z))
    rad = abs(xy) ** 2 * ny**2 + abs(xz) ** 2 * nz**2 + 2 * abs(xy) * abs(xz) * abs(yz)
    rhs = nx * math.sqrt(rad)
    return _report("gcs", ["lhs", "middle", "rhs"], [lhs, mid, rhs], [LE, LE], tol, [x, y, z])


def check_eq4(x, y, e, tol: float = VECTOR_TOL) -> BoundReport:
    """For unit e: |<x,e>|^2 + |<y,e>|^2 <= ||<e,x>x + <e,y>y|| <= sqrt(radical)

    where radical = |<x,e>|^2||x||^2 + |<y,e>|^2||y||^2 + 2|<x,e>||<y,e>||<x,y>|.
    """
    x, y, e = _vectors(x, y, e)
    if abs(float(np.linalg.norm(e)) - 1.0) > UNIT_TOL:
        raise InvalidMatrixError("e must be a unit vector")
    xe, ye, xy = inner(x, e), inner(y, e), inner(x, y)
    nx, ny = float(np.linalg.norm(x)), float(np.linalg.norm(y))
    lhs = abs(xe) ** 2 + abs(ye) ** 2
    mid = float(np.linalg.norm(inner(e, x) * x + inner(e, y) * y))
    rhs = math.sqrt(abs(xe) ** 2 * nx**2 + abs(ye) ** 2 * ny**2 + 2 * abs(xe) * abs(ye) * abs(xy))
    return _report("eq4", ["lhs", "middle", "rhs"], [lhs, mid, rhs], [LE, LE], tol, [x, y, e])


def cos_angle(a: np.ndarray, b: np.ndarray) -> float:
    """|<a,b>| / (||a|| ||b||), the cosine of the angle in [0, pi/2]."""
    return abs(inner(a, b)) / (float(np.linalg.norm(a)) * float(np.linalg.norm(b)))


def check_angle_inequality(x, y, z, tol: float = VECTOR_TOL) -> BoundReport:
    """cos(yx) cos(xz) <= sqrt(cos^2(yx) + cos^2(xz) + 2 cos(yx) cos(xz) cos(zy)) / 2."""
    x, y, z = _vectors(x, y, z)
    if any(float(np.linalg.norm(v)) == 0.0 for v in (x, y, z)):
        raise InvalidMatrixError("angles need nonzero vectors")
    cyx, cxz, czy = cos_angle(y, x), cos_angle(x, z), cos_angle(z, y)
    lhs = cyx * cxz
    rhs = 0.5 * math.sqrt(cyx**2 + cxz**2 + 2 * cyx * cxz * czy)
    return _report("angle", ["lhs", "rhs"], [lhs, rhs], [LE], tol, [x, y, z])


def check_mixed_schwarz(t, x, y, tol: float = VECTOR_TOL) -> BoundReport:
    """|<Tx, y>| <= sqrt(<|T|x, x> <|T*|y, y>)."""
    t = as_matrix(t)
    x, y = _vectors(x, y)
    if x.shape[0] != t.shape[0]:
        raise DimensionMismatchError("vector length does not match the matrix dimension")
    lhs = abs(inner(t @ x, y))
    px = max(inner(matrix_abs(t) @ x, x).real, 0.0)
    py = max(inner(matrix_abs(t.conj().T) @ y, y).real, 0.0)
    rhs = math.sqrt(px * py)
    return _report("mixed-schwarz", ["lhs", "rhs"], [lhs, rhs], [LE], tol, [t, x, y])


VECTOR_CHECKS = {
    "gcs": check_generalized_cauchy_schwarz,
    "eq4": check_eq4,
    "angle": check_angle_inequality,
    "mixed-schwarz": check_mixed_schwarz,
}
