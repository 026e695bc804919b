"""Published worked examples: integer matrices with printed values.

Each fixture recomputes one printed quantity from registry terms (or, for the
quantity || |A|^2 + |B|^2 || that has no registry entry of its own, directly)
and passes when it is within ``1e-3 * max(1, |printed|)`` of the printed value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..catalog import get_relation
from ..catalog.context import EvalContext
from ..radii import DEFAULT_CONFIG, SweepConfig
from .suite import ExampleResult, SuiteReport

REL_BAND = 1e-3


def _term(rid: str, name: str) -> Callable:
    for t in get_relation(rid).terms:
        if t.name == name:
            return t.fn
    raise KeyError(f"{rid} has no term {name!r}")


def _squared(fn):
    return lambda c, *m: fn(c, *m) ** 2


def _norm_abs_sq_sum(c, a, b):
    """|| |A|^2 + |B|^2 ||."""
    return c.n(c.abs2(a) + c.abs2(b))


# quantity name -> evaluator (ctx, *matrices) -> Approx
QUANTITIES = {
    "omega": _term("R01", "omega"),
    "omega_sq": _term("R12", "omega_sq"),
    "half_norm_abs_sum": _term("R02", "half_norm_abs_sum"),
    "half_norm_abs_sum_sq": _term("R03", "half_norm_abs_sum_sq"),
    "half_norm_abs_sq_sum": _term("R03", "half_norm_abs_sq_sum"),
    "norm_and_square_bound": _term("R12", "bound"),
    "cartesian_radius_bound": _term("R14", "bound"),
    "cartesian_radius_bound_sq": _squared(_term("R14", "bound")),
    "cartesian_square_bound": _term("R18", "bound"),
    "radius_norm_pair_bound": _term("R06", "bound"),
    "adjoint_modulus_pair_bound": _term("R07", "bound"),
    "cartesian_pair_bound": _term("R08", "bound"),
    "two_cartesian_pair_bound": _term("R09", "bound"),
    "norm_weighted_pair_norm_bound": _term("R10", "bound"),
    "cartesian_pair_norm_bound": _term("R11", "bound"),
    "block_omega_sq": _term("R15", "block_omega_sq"),
    "half_norm_sum_sq": _squared(_term("R31", "half_norm_sum")),
    "block_cartesian_bound": _term("R15", "bound"),
    "norm_abs_sq_sum": _norm_abs_sq_sum,
}


@dataclass(frozen=True)
class Fixture:
    id: str
    matrices: tuple  # integer entries, row-major nested lists
    quantity: str
    printed: float

    def arrays(self):
        return [np.array(m, dtype=np.complex128) for m in self.matrices]


def _fixtures() -> tuple:
    rows = [
        ("pair-radius-norm-1", ([[2, 3], [1, 0]], [[2, 2], [5, 3]]),
         [("radius_norm_pair_bound", 47.0005), ("norm_abs_sq_sum", 53.7099)]),
        ("pair-radius-norm-2", ([[4, 0], [1, 3]], [[1, 3], [0, 5]]),
         [("radius_norm_pair_bound", 47.5757), ("norm_abs_sq_sum", 44.3654)]),
        ("pair-adjoint-modulus-1", ([[4, 3], [4, 2]], [[0, 4], [3, 0]]),
         [("adjoint_modulus_pair_bound", 56.1224), ("norm_abs_sq_sum", 55.8806)]),
        ("pair-cartesian-1", ([[-3, 3], [1, -1]], [[4, -5], [3, -5]]),
         [("cartesian_pair_bound", 57.1627), ("adjoint_modulus_pair_bound", 57.3063)]),
        ("pair-cartesian-2", ([[0, -4], [1, 2]], [[-3, 3], [2, 4]]),
         [("cartesian_pair_bound", 33.1982), ("adjoint_modulus_pair_bound", 31.3455)]),
        ("pair-two-cartesian-1", ([[4, -2], [-4, -5]], [[2, 5], [2, 4]]),
         [("two_cartesian_pair_bound", 76.375), ("cartesian_pair_bound", 77.146),
          ("adjoint_modulus_pair_bound", 76.3889)]),
        ("pair-two-cartesian-2", ([[-5, 1], [5, 3]], [[-5, -2], [1, -4]]),
         [("two_cartesian_pair_bound", 72.465), ("cartesian_pair_bound", 67.9146),
          ("adjoint_modulus_pair_bound", 66.9069)]),
        ("pair-norm-1", ([[0, 1], [1, 0]], [[1, 1], [0, 1]]),
         [("norm_weighted_pair_norm_bound", 3.02706), ("cartesian_pair_norm_bound", 3.70246)]),
        ("pair-norm-2", ([[1, 1], [0, 0]], [[0, 1], [1, 0]]),
         [("norm_weighted_pair_norm_bound", 3.08509), ("cartesian_pair_norm_bound", 2.93621)]),
        ("square-radius-1", ([[-5, 1], [4, 4]],),
         [("half_norm_abs_sq_sum", 34.1478), ("norm_and_square_bound", 37.4633)]),
        ("square-radius-2", ([[1, 0], [1, 0]],),
         [("half_norm_abs_sq_sum", 1.70711), ("norm_and_square_bound", 1.60355)]),
        ("square-radius-3", ([[2, 0], [1, 5]],),
         [("norm_and_square_bound", 25.8742), ("half_norm_abs_sum_sq", 26.018)]),
        ("square-radius-4", ([[3, 0], [4, 1]],),
         [("norm_and_square_bound", 19.7967), ("half_norm_abs_sum_sq", 19.4443)]),
        ("radius-cartesian-1", ([[1, 0], [4, 1]],),
         [("omega", 3.0), ("half_norm_abs_sum", 3.1305), ("cartesian_radius_bound", 3.00956)]),
        ("radius-cartesian-2", ([[0, 3], [0, 0]],),
         [("omega", 1.5), ("cartesian_radius_bound", 1.78381)]),
        ("operator-matrix-1", ([[5, 0], [2, 5]], [[1, 0], [1, 3]]),
         [("block_omega_sq", 20.078), ("half_norm_sum_sq", 21.5231), ("block_cartesian_bound", 22.4192)]),
        ("operator-matrix-2", ([[5, 0], [1, 2]], [[5, 4], [4, 0]]),
         [("block_omega_sq", 36.25), ("half_norm_sum_sq", 38.0298), ("block_cartesian_bound", 37.7279)]),
        ("radius-squared-1", ([[1, 2], [0, 4]],),
         [("omega_sq", 18.5139), ("half_norm_abs_sum_sq", 19.0656), ("cartesian_square_bound", 18.7755)]),
        ("radius-squared-2", ([[0, 3], [4, 2]],),
         [("omega_sq", 21.5301), ("half_norm_abs_sum_sq", 21.5301), ("cartesian_square_bound", 21.5932)]),
        ("radius-squared-3", ([[1, 1], [5, 1]],),
         [("norm_and_square_bound", 19.7082), ("cartesian_square_bound", 17.282)]),
        ("radius-squared-4", ([[2, 0], [1, 5]],),
         [("norm_and_square_bound", 25.8742), ("cartesian_square_bound", 25.881)]),
        ("radius-squared-5", ([[0, 3], [0, 0]],),
         [("cartesian_square_bound", 4.5), ("cartesian_radius_bound_sq", 3.18198)]),
    ]
    out = []
    for fid, mats, quantities in rows:
        for quantity, printed in quantities:
            out.append(Fixture(fid, mats, quantity, printed))
    return tuple(out)


FIXTURES = _fixtures()


def within_band(computed: float, printed: float) -> bool:
    return abs(computed - printed) <= REL_BAND * max(1.0, abs(printed))


def compute_fixture(fx: Fixture, cfg: SweepConfig = DEFAULT_CONFIG, ctx: EvalContext | None = None) -> float:
    ctx = ctx or EvalContext(cfg)
    return QUANTITIES[fx.quantity](ctx, *fx.arrays()).value


def run_paper_examples(cfg: SweepConfig = DEFAULT_CONFIG) -> SuiteReport:
    """Recompute every printed example value."""
    report = SuiteReport()
    start = time.perf_counter()
    contexts: dict = {}
    for fx in FIXTURES:
        ctx = contexts.setdefault(fx.id, EvalContext(cfg))
        computed = compute_fixture(fx, cfg, ctx)
        report.examples.append(
            ExampleResult(fx.id, fx.quantity, fx.printed, computed, within_band(computed, fx.printed))
        )
    report.wall_clock = time.perf_counter() - start
    return report
