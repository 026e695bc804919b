"""The relation registry: every checked inequality and identity, as data.

A relation is an ordered list of scalar terms joined by links (``<=`` or
``==``).  Terms are functions ``(ctx, *matrices) -> Approx`` evaluated with an
:class:`~numrad.catalog.context.EvalContext`.

Notation in the descriptions: w = numerical radius, ||.|| = operator norm,
w_e / ||.||_e = Euclidean operator radius / norm of a pair, |X| = (X*X)^(1/2),
Re/Im = Hermitian parts, and bw(A, B) = w([[0, A], [B*, 0]]).
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..errors import UnknownRelationError
from .approx import maximum, sqrt

LE = "<="
EQ = "=="
SQRT2 = math.sqrt(2.0)


class Signature(str, enum.Enum):
    SINGLE_MATRIX = "single_matrix"
    MATRIX_PAIR = "matrix_pair"
    VECTOR_TRIPLE = "vector_triple"
    VECTOR_PAIR_UNIT = "vector_pair_unit"

    @property
    def arity(self) -> int:
        return {"single_matrix": 1, "matrix_pair": 2, "vector_triple": 3, "vector_pair_unit": 2}[
            self.value
        ]


class Kind(str, enum.Enum):
    BOUND = "bound"
    CHAIN = "chain"
    EQUALITY = "equality"


@dataclass(frozen=True)
class Term:
    name: str
    fn: Callable = field(repr=False, compare=False)


@dataclass(frozen=True)
class Relation:
    id: str
    title: str
    signature: Signature
    kind: Kind
    precondition: str
    terms: tuple
    links: tuple
    description: str

    def __post_init__(self):
        if len(self.links) != len(self.terms) - 1:
            raise ValueError(f"{self.id}: need one link per adjacent pair of terms")
        if any(op not in (LE, EQ) for op in self.links):
            raise ValueError(f"{self.id}: unknown link operator")
        if self.kind is Kind.BOUND and (len(self.terms) != 2 or self.links != (LE,)):
            raise ValueError(f"{self.id}: a bound has exactly two terms joined by <=")
        if self.kind is Kind.CHAIN and len(self.terms) < 3:
            raise ValueError(f"{self.id}: a chain has at least three terms")
        if self.kind is Kind.EQUALITY and any(op != EQ for op in self.links):
            raise ValueError(f"{self.id}: an equality joins all terms by ==")

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind.value,
            "signature": self.signature.value,
            "precondition": self.precondition,
            "terms": [t.name for t in self.terms],
            "links": list(self.links),
            "description": self.description,
            "anchor": self.title,
        }


# ---------------------------------------------------------------------------
# shared building blocks; `c` is the evaluation context


def _abs_sq_combo(c, a, b):
    """w(|a|^2 + i|b|^2)."""
    return c.w(c.abs2(a) + 1j * c.abs2(b))


def _abs_sq_combo_adj(c, a, b):
    """w(|a*|^2 + i|b*|^2)."""
    return c.w(c.abs2(c.adj(a)) + 1j * c.abs2(c.adj(b)))


def _abs_combo(c, a, b):
    """w(|a| + i|b|)."""
    return c.w(c.abs(a) + 1j * c.abs(b))


def _abs_combo_adj(c, a, b):
    """w(|a*| + i|b*|)."""
    return c.w(c.abs(c.adj(a)) + 1j * c.abs(c.adj(b)))


def _cross(c, a, b):
    """2 w(a) w(b) w(b* a)."""
    return 2 * c.w(a) * c.w(b) * c.w(c.adj(b) @ a)


def _quartic_mean(c, a, b):
    """sqrt(w(a)^4 + w(b)^4) w(|a|^2 + i|b|^2)."""
    return sqrt(c.w(a) ** 4 + c.w(b) ** 4) * _abs_sq_combo(c, a, b)


def _mixed_radicand(c, a, b):
    """The radicand of the pair bound built from |.| combinations."""
    return _abs_sq_combo(c, a, b) * _abs_sq_combo_adj(c, a, b) + _abs_combo(c, a, b) * _abs_combo_adj(
        c, a, b
    ) * c.w(b @ c.adj(a))


def _t_abs_sq_combo(c, t):
    """w(|T|^2 + i|T*|^2)."""
    return _abs_sq_combo(c, t, c.adj(t))


def _t_abs_combo(c, t):
    """w(|T| + i|T*|)."""
    return _abs_combo(c, t, c.adj(t))


def _abs_sq_sum_norm(c, t):
    """|| |T|^2 + |T*|^2 ||."""
    return c.n(c.abs2(t) + c.abs2(c.adj(t)))


def _pair_abs_product(c, a, b):
    """sqrt(w(|a| + i|b|) w(|a*| + i|b*|))."""
    return sqrt(_abs_combo(c, a, b) * _abs_combo_adj(c, a, b))


def _reim(c, t):
    return c.re(t), c.im(t)


# ---------------------------------------------------------------------------


def _single(rid, title, terms, links, description, kind=Kind.BOUND, precondition="none"):
    return Relation(
        rid, title, Signature.SINGLE_MATRIX, kind, precondition,
        tuple(Term(n, f) for n, f in terms), tuple(links), description,
    )


def _pair(rid, title, terms, links, description, kind=Kind.BOUND, precondition="none"):
    return Relation(
        rid, title, Signature.MATRIX_PAIR, kind, precondition,
        tuple(Term(n, f) for n, f in terms), tuple(links), description,
    )


def _build() -> tuple:
    r = []
    r.append(_single(
        "R01", "norm equivalence of the numerical radius",
        [("half_norm", lambda c, t: 0.5 * c.n(t)),
         ("omega", lambda c, t: c.w(t)),
         ("norm", lambda c, t: c.n(t))],
        [LE, LE], "||T||/2 <= w(T) <= ||T||", kind=Kind.CHAIN))
    r.append(_single(
        "R02", "modulus-sum upper bound",
        [("omega", lambda c, t: c.w(t)),
         ("half_norm_abs_sum", lambda c, t: 0.5 * c.n(c.abs(t) + c.abs(c.adj(t))))],
        [LE], "w(T) <= || |T| + |T*| || / 2"))
    r.append(_single(
        "R03", "squared modulus-sum bounds",
        [("omega_sq", lambda c, t: c.w(t) ** 2),
         ("half_norm_abs_sum_sq", lambda c, t: (0.5 * c.n(c.abs(t) + c.abs(c.adj(t)))) ** 2),
         ("half_norm_abs_sq_sum", lambda c, t: 0.5 * _abs_sq_sum_norm(c, t))],
        [LE, LE],
        "w(T)^2 <= (|| |T| + |T*| || / 2)^2 <= || |T|^2 + |T*|^2 || / 2",
        kind=Kind.CHAIN))
    r.append(_pair(
        "R04", "pair radius by radius-norm products",
        [("omega_e", lambda c, a, b: c.we(a, b)),
         ("sqrt_omega_norm_sum", lambda c, a, b: sqrt(c.w(a) * c.n(a) + c.w(b) * c.n(b)))],
        [LE], "w_e(A, B) <= sqrt(w(A)||A|| + w(B)||B||)"))
    r.append(_pair(
        "R05", "pair radius for square-zero operators",
        [("omega_e", lambda c, a, b: c.we(a, b)),
         ("sqrt_omega_norm_sum", lambda c, a, b: sqrt(c.w(a) * c.n(a) + c.w(b) * c.n(b))),
         ("sqrt_half_norm_sq_sum", lambda c, a, b: sqrt((c.n(a) ** 2 + c.n(b) ** 2) * 0.5))],
        [LE, EQ],
        "for A^2 = B^2 = 0: w_e(A, B) <= sqrt(w(A)||A|| + w(B)||B||) = sqrt((||A||^2 + ||B||^2)/2), "
        "the equality being w(X) = ||X||/2 for square-zero X",
        kind=Kind.CHAIN, precondition="square_zero"))
    r.append(_pair(
        "R06", "pair radius via radius-norm products and w(B*A)",
        [("omega_e_sq", lambda c, a, b: c.we(a, b) ** 2),
         ("bound", lambda c, a, b: sqrt(
             c.w(a) ** 2 * c.n(a) ** 2 + c.w(b) ** 2 * c.n(b) ** 2 + _cross(c, a, b)))],
        [LE],
        "w_e(A, B)^2 <= sqrt(w(A)^2||A||^2 + w(B)^2||B||^2 + 2 w(A) w(B) w(B*A))"))
    r.append(_pair(
        "R07", "pair radius via weighted |A*|^2, |B*|^2",
        [("omega_e_sq", lambda c, a, b: c.we(a, b) ** 2),
         ("bound", lambda c, a, b: sqrt(
             c.n_comb((c.w(a) ** 2, c.abs2(c.adj(a))), (c.w(b) ** 2, c.abs2(c.adj(b))))
             + 2 * c.w(a) * c.w(b) * c.w(a @ c.adj(b))))],
        [LE],
        "w_e(A, B)^2 <= sqrt(|| w(A)^2 |A*|^2 + w(B)^2 |B*|^2 || + 2 w(A) w(B) w(AB*))"))
    r.append(_pair(
        "R08", "pair radius via the Cartesian combination |A|^2 + i|B|^2",
        [("omega_e_sq", lambda c, a, b: c.we(a, b) ** 2),
         ("bound", lambda c, a, b: sqrt(_quartic_mean(c, a, b) + _cross(c, a, b)))],
        [LE],
        "w_e(A, B)^2 <= sqrt(sqrt(w(A)^4 + w(B)^4) w(|A|^2 + i|B|^2) + 2 w(A) w(B) w(B*A))"))
    r.append(_pair(
        "R09", "pair radius via two Cartesian combinations",
        [("omega_e_sq", lambda c, a, b: c.we(a, b) ** 2),
         ("bound", lambda c, a, b: sqrt(
             _abs_sq_combo(c, a, b) * _abs_sq_combo_adj(c, a, b) + _cross(c, a, b)))],
        [LE],
        "w_e(A, B)^2 <= sqrt(w(|A|^2 + i|B|^2) w(|A*|^2 + i|B*|^2) + 2 w(A) w(B) w(B*A))"))
    r.append(_pair(
        "R10", "pair norm via norm-weighted moduli",
        [("norm_e_sq", lambda c, a, b: c.ne(a, b) ** 2),
         ("bound", lambda c, a, b: sqrt(
             c.n_comb((c.n(a) ** 2, c.abs2(a)), (c.n(b) ** 2, c.abs2(b)))
             + 0.5 * c.n(c.abs(a) + c.abs(b)) * c.n(c.abs(c.adj(a)) + c.abs(c.adj(b)))
             * c.w(c.adj(a) @ b)))],
        [LE],
        "||(A, B)||_e^2 <= sqrt(|| ||A||^2|A|^2 + ||B||^2|B|^2 || "
        "+ || |A| + |B| || || |A*| + |B*| || w(A*B) / 2)"))
    r.append(_pair(
        "R11", "pair norm via Cartesian combinations of moduli",
        [("norm_e_sq", lambda c, a, b: c.ne(a, b) ** 2),
         ("bound", lambda c, a, b: sqrt(_mixed_radicand(c, a, b)))],
        [LE],
        "||(A, B)||_e^2 <= sqrt(w(|A|^2 + i|B|^2) w(|A*|^2 + i|B*|^2) "
        "+ w(|A| + i|B|) w(|A*| + i|B*|) w(BA*))"))
    r.append(_single(
        "R12", "squared radius by norm and w(T^2)",
        [("omega_sq", lambda c, t: c.w(t) ** 2),
         ("bound", lambda c, t: 0.5 * c.n(t) ** 2 + 0.5 * c.w(t @ t))],
        [LE], "w(T)^2 <= ||T||^2/2 + w(T^2)/2"))
    r.append(_single(
        "R13", "squared radius by moduli and w(T^2)",
        [("omega_sq", lambda c, t: c.w(t) ** 2),
         ("bound", lambda c, t: 0.25 * _abs_sq_sum_norm(c, t) + 0.5 * c.w(t @ t))],
        [LE], "w(T)^2 <= || |T|^2 + |T*|^2 || / 4 + w(T^2)/2"))
    r.append(_single(
        "R14", "radius by w(|T|^2 + i|T*|^2) and w(T^2)",
        [("omega", lambda c, t: c.w(t)),
         ("bound", lambda c, t: 0.5 * sqrt(SQRT2 * _t_abs_sq_combo(c, t) + 2 * c.w(t @ t)))],
        [LE], "w(T) <= sqrt(sqrt(2) w(|T|^2 + i|T*|^2) + 2 w(T^2)) / 2"))
    r.append(_pair(
        "R15", "operator-matrix radius by Cartesian combinations",
        [("block_omega_sq", lambda c, a, b: c.bw(a, b) ** 2),
         ("bound", lambda c, a, b: (SQRT2 / 4) * maximum(
             _abs_sq_combo_adj(c, a, b), _abs_sq_combo(c, a, b))
          + 0.5 * maximum(c.w(a @ c.adj(b)), c.w(c.adj(b) @ a)))],
        [LE],
        "bw(A, B)^2 <= (sqrt(2)/4) max{w(|A*|^2 + i|B*|^2), w(|A|^2 + i|B|^2)} "
        "+ max{w(AB*), w(B*A)} / 2"))
    r.append(_single(
        "R16", "real-part norm bound",
        [("re_norm_sq", lambda c, t: c.n(c.re(t)) ** 2),
         ("bound", lambda c, t: 0.25 * sqrt(
             SQRT2 * c.w(t) ** 2 * _t_abs_sq_combo(c, t) + 2 * c.w(t) ** 2 * c.w(t @ t))
          + 0.5 * c.w(t) ** 2)],
        [LE],
        "||Re T||^2 <= sqrt(sqrt(2) w(T)^2 w(|T|^2 + i|T*|^2) + 2 w(T)^2 w(T^2)) / 4 + w(T)^2 / 2"))
    r.append(_pair(
        "R17", "radius of a sum",
        [("omega_sum_sq", lambda c, a, b: c.w(a + b) ** 2),
         ("bound", lambda c, a, b: sqrt(_quartic_mean(c, a, b) + _cross(c, a, b))
          + 2 * c.w(a) * c.w(b))],
        [LE],
        "w(A + B)^2 <= sqrt(sqrt(w(A)^4 + w(B)^4) w(|A|^2 + i|B|^2) + 2 w(A) w(B) w(B*A)) "
        "+ 2 w(A) w(B)"))
    r.append(_single(
        "R18", "squared radius by w(|T|^2 + i|T*|^2)^2 and w(T^2)",
        [("omega_sq", lambda c, t: c.w(t) ** 2),
         ("bound", lambda c, t: 0.5 * sqrt(
             _t_abs_sq_combo(c, t) ** 2 + 2 * c.w(t) ** 2 * c.w(t @ t)))],
        [LE], "w(T)^2 <= sqrt(w(|T|^2 + i|T*|^2)^2 + 2 w(T)^2 w(T^2)) / 2"))
    r.append(_pair(
        "R19", "operator-matrix radius by the mixed pair radicand",
        [("block_omega_sq", lambda c, a, b: c.bw(a, b) ** 2),
         ("bound", lambda c, a, b: 0.25 * sqrt(_mixed_radicand(c, a, b))
          + 0.25 * sqrt(c.n(c.abs2(a) + c.abs2(b))
                        * c.n(c.abs2(c.adj(a)) + c.abs2(c.adj(b)))))],
        [LE],
        "bw(A, B)^2 <= sqrt(w(|A|^2 + i|B|^2) w(|A*|^2 + i|B*|^2) + w(|A| + i|B|) w(|A*| + i|B*|) w(BA*)) / 4 "
        "+ sqrt(|| |A|^2 + |B|^2 || || |A*|^2 + |B*|^2 ||) / 4"))
    r.append(_single(
        "R20", "squared radius by Cartesian combinations of moduli",
        [("omega_sq", lambda c, t: c.w(t) ** 2),
         ("bound", lambda c, t: 0.25 * (
             sqrt(_t_abs_sq_combo(c, t) ** 2 + _t_abs_combo(c, t) ** 2 * c.w(t @ t))
             + _abs_sq_sum_norm(c, t)))],
        [LE],
        "w(T)^2 <= (sqrt(w(|T|^2 + i|T*|^2)^2 + w(|T| + i|T*|)^2 w(T^2)) + || |T|^2 + |T*|^2 ||) / 4"))
    r.append(_single(
        "R21", "radius through the Cartesian pair norm",
        [("omega_sq", lambda c, t: c.w(t) ** 2),
         ("norm_e_reim_sq", lambda c, t: c.ne(*_reim(c, t)) ** 2),
         ("omega_abs_reim_sq", lambda c, t: _abs_combo(c, *_reim(c, t)) ** 2),
         ("half_norm_tt", lambda c, t: 0.5 * c.n(c.adj(t) @ t + t @ c.adj(t)))],
        [LE, LE, LE],
        "w(T)^2 <= ||(Re T, Im T)||_e^2 <= w(|Re T| + i|Im T|)^2 <= ||T*T + TT*|| / 2",
        kind=Kind.CHAIN))
    r.append(_pair(
        "R22", "pair norm by modulus combinations",
        [("norm_e", lambda c, a, b: c.ne(a, b)),
         ("bound", lambda c, a, b: _pair_abs_product(c, a, b))],
        [LE], "||(A, B)||_e <= sqrt(w(|A| + i|B|) w(|A*| + i|B*|))"))
    r.append(_pair(
        "R23", "pair radius, pair norm and modulus combinations",
        [("omega_e", lambda c, a, b: c.we(a, b)),
         ("norm_e", lambda c, a, b: c.ne(a, b)),
         ("bound", lambda c, a, b: _pair_abs_product(c, a, b))],
        [LE, LE],
        "w_e(A, B) <= ||(A, B)||_e <= sqrt(w(|A| + i|B|) w(|A*| + i|B*|))",
        kind=Kind.CHAIN))
    r.append(_single(
        "R24", "Cartesian pair norm of an accretive-dissipative operator",
        [("norm_e_reim", lambda c, t: c.ne(*_reim(c, t))),
         ("omega", lambda c, t: c.w(t))],
        [EQ], "Re T, Im T >= 0 implies ||(Re T, Im T)||_e = w(T)",
        kind=Kind.EQUALITY, precondition="accretive_dissipative"))
    r.append(_single(
        "R25", "Cartesian pair norm of a normal operator",
        [("norm_e_reim", lambda c, t: c.ne(*_reim(c, t))),
         ("omega_abs_reim", lambda c, t: _abs_combo(c, *_reim(c, t))),
         ("norm", lambda c, t: c.n(t))],
        [EQ, EQ], "T normal implies ||(Re T, Im T)||_e = w(|Re T| + i|Im T|) = ||T||",
        kind=Kind.EQUALITY, precondition="normal"))
    r.append(_single(
        "R26", "radius refined through ||(T, T*)||_e",
        [("omega", lambda c, t: c.w(t)),
         ("scaled_norm_e_t_tstar", lambda c, t: (SQRT2 / 2) * c.ne(t, c.adj(t))),
         ("scaled_omega_abs", lambda c, t: (SQRT2 / 2) * _t_abs_combo(c, t))],
        [LE, LE],
        "w(T) <= (sqrt(2)/2) ||(T, T*)||_e <= (sqrt(2)/2) w(|T| + i|T*|)",
        kind=Kind.CHAIN))
    r.append(_single(
        "R27", "lower chain through the Cartesian operator matrix",
        [("half_norm", lambda c, t: 0.5 * c.n(t)),
         ("block_omega_reim", lambda c, t: c.bw(*_reim(c, t))),
         ("scaled_norm_e_reim", lambda c, t: (SQRT2 / 2) * c.ne(*_reim(c, t))),
         ("scaled_omega_abs_reim", lambda c, t: (SQRT2 / 2) * _abs_combo(c, *_reim(c, t))),
         ("scaled_sqrt_norm_sq_sum", lambda c, t: (SQRT2 / 2) * sqrt(
             c.n(c.re(t) @ c.re(t) + c.im(t) @ c.im(t)))),
         ("scaled_sqrt_part_norms", lambda c, t: (SQRT2 / 2) * sqrt(
             c.n(c.re(t)) ** 2 + c.n(c.im(t)) ** 2)),
         ("omega", lambda c, t: c.w(t))],
        [LE] * 6,
        "||T||/2 <= bw(Re T, Im T) <= (sqrt(2)/2)||(Re T, Im T)||_e <= (sqrt(2)/2) w(|Re T| + i|Im T|) "
        "<= (sqrt(2)/2)||(Re T)^2 + (Im T)^2||^(1/2) <= (sqrt(2)/2) sqrt(||Re T||^2 + ||Im T||^2) <= w(T). "
        "The fourth term uses |Im T| in its imaginary part; the printed source repeats |Re T| there, "
        "which its own derivation does not support.",
        kind=Kind.CHAIN))
    r.append(_single(
        "R28", "accretive-dissipative norm refinement",
        [("scaled_norm", lambda c, t: (SQRT2 / 2) * c.n(t)),
         ("scaled_block_omega_reim", lambda c, t: SQRT2 * c.bw(*_reim(c, t))),
         ("norm_e_reim", lambda c, t: c.ne(*_reim(c, t))),
         ("omega", lambda c, t: c.w(t))],
        [LE, LE, LE],
        "Re T, Im T >= 0 implies (sqrt(2)/2)||T|| <= sqrt(2) bw(Re T, Im T) <= ||(Re T, Im T)||_e <= w(T)",
        kind=Kind.CHAIN, precondition="accretive_dissipative"))
    r.append(_pair(
        "R29", "operator-matrix radius by the pair norm",
        [("block_omega", lambda c, a, b: c.bw(a, b)),
         ("bound", lambda c, a, b: c.ne(a, b) - 0.5 * abs(c.n(a) - c.n(b)))],
        [LE], "bw(A, B) <= ||(A, B)||_e - | ||A|| - ||B|| | / 2"))
    r.append(_pair(
        "R30", "pair norm dominates both norms",
        [("max_norm", lambda c, a, b: maximum(c.n(a), c.n(b))),
         ("norm_e", lambda c, a, b: c.ne(a, b))],
        [LE], "max{||A||, ||B||} <= ||(A, B)||_e"))
    r.append(_pair(
        "R31", "operator-matrix radius as a sup of norms",
        [("block_omega_direct", lambda c, a, b: c.w(np.block(
             [[np.zeros_like(a), a], [c.adj(b), np.zeros_like(a)]]))),
         ("block_omega_sweep", lambda c, a, b: c.bw(a, b)),
         ("half_norm_sum", lambda c, a, b: 0.5 * (c.n(a) + c.n(b)))],
        [EQ, LE],
        "w([[0, A], [B*, 0]]) = sup_theta ||A + e^{i theta} B|| / 2 <= (||A|| + ||B||)/2",
        kind=Kind.CHAIN))
    r.append(_single(
        "R32", "radius as the sup of real-part norms",
        [("omega", lambda c, t: c.w(t)),
         ("sup_re_norm", lambda c, t: c.sup_re_norm(t))],
        [EQ], "w(T) = sup_theta ||Re(e^{i theta} T)||", kind=Kind.EQUALITY))
    r.append(_single(
        "R33", "real part is dominated by the radius",
        [("re_norm", lambda c, t: c.n(c.re(t))),
         ("omega", lambda c, t: c.w(t))],
        [LE], "||Re T|| <= w(T)"))
    r.append(_single(
        "R34", "Cartesian combination of squared moduli",
        [("omega_abs_sq", lambda c, t: _t_abs_sq_combo(c, t)),
         ("bound", lambda c, t: sqrt(c.n(
             c.abs2(t) @ c.abs2(t) + c.abs2(c.adj(t)) @ c.abs2(c.adj(t)))))],
        [LE], "w(|T|^2 + i|T*|^2) <= || |T|^4 + |T*|^4 ||^(1/2)"))
    r.append(_single(
        "R35", "radius equals the Cartesian pair radius",
        [("omega", lambda c, t: c.w(t)),
         ("omega_e_reim", lambda c, t: c.we(*_reim(c, t)))],
        [EQ], "w(T) = w_e(Re T, Im T)", kind=Kind.EQUALITY))
    r.append(_single(
        "R36", "pair radius of T and its adjoint",
        [("omega_e_t_tstar", lambda c, t: c.we(t, c.adj(t))),
         ("scaled_omega", lambda c, t: SQRT2 * c.w(t))],
        [EQ], "w_e(T, T*) = sqrt(2) w(T)", kind=Kind.EQUALITY))
    r.append(_single(
        "R37", "conjugate Cartesian combinations",
        [("omega_plus", lambda c, t: _t_abs_sq_combo(c, t)),
         ("omega_minus", lambda c, t: c.w(c.abs2(t) - 1j * c.abs2(c.adj(t))))],
        [EQ], "w(|T|^2 + i|T*|^2) = w(|T|^2 - i|T*|^2)", kind=Kind.EQUALITY))
    return tuple(r)


_REGISTRY = _build()
_BY_ID = {rel.id: rel for rel in _REGISTRY}


def list_relations() -> tuple:
    """The full, immutable registry in id order."""
    return _REGISTRY


def get_relation(rid: str) -> Relation:
    try:
        return _BY_ID[rid.upper()]
    except (KeyError, AttributeError):
        raise UnknownRelationError(f"unknown relation {rid!r}") from None


def registry_json() -> str:
    return json.dumps([rel.to_dict() for rel in _REGISTRY], indent=2, sort_keys=True)
