"""Memoizing evaluation context handed to every relation term.

One context lives for one relation evaluation; identical sub-quantities such
as ``omega(A)`` that appear in several terms are computed once.
"""

from __future__ import annotations

import numpy as np

from .. import linalg, radii
from ..radii import DEFAULT_CONFIG, SweepConfig
from .approx import Approx

_EPS = np.finfo(float).eps


def _key(kind: str, mats) -> tuple:
    return (kind,) + tuple((m.shape, np.ascontiguousarray(m).tobytes()) for m in mats)


def _norm_err(norm: float, dim: int) -> float:
    return 16.0 * _EPS * dim * (1.0 + norm)


class EvalContext:
    """Quantities used by relation terms, each returned as an :class:`Approx`."""

    def __init__(self, cfg: SweepConfig = DEFAULT_CONFIG):
        self.cfg = cfg
        self._memo: dict = {}

    def _cached(self, kind, mats, compute):
        key = _key(kind, mats)
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    # -- matrices ---------------------------------------------------------

    @staticmethod
    def adj(x: np.ndarray) -> np.ndarray:
        return x.conj().T

    def abs(self, x: np.ndarray) -> np.ndarray:
        """``|x| = (x* x)^(1/2)``."""
        return self._cached("abs", [x], lambda: linalg.matrix_abs(x))

    @staticmethod
    def abs2(x: np.ndarray) -> np.ndarray:
        """``|x|^2 = x* x``, formed directly rather than by squaring ``|x|``."""
        return x.conj().T @ x

    @staticmethod
    def re(x: np.ndarray) -> np.ndarray:
        return (x + x.conj().T) / 2

    @staticmethod
    def im(x: np.ndarray) -> np.ndarray:
        return (x - x.conj().T) / 2j

    # -- scalars ----------------------------------------------------------

    def n(self, x: np.ndarray) -> Approx:
        """Operator norm (exact formula; roundoff-sized error)."""

        def compute():
            v = linalg.operator_norm(x)
            return Approx(v, _norm_err(v, x.shape[0]))

        return self._cached("n", [x], compute)

    def n_comb(self, *pairs) -> Approx:
        """``|| sum c_k M_k ||`` for uncertain scalar weights ``c_k``.

        The weights' errors move the norm by at most ``sum err(c_k) ||M_k||``.
        """
        total = sum(Approx.of(c).value * m for c, m in pairs)
        base = self.n(total)
        spread = sum(Approx.of(c).err * self.n(m).value for c, m in pairs)
        return Approx(base.value, base.err + spread)

    def _result(self, kind, mats, compute) -> Approx:
        res = self._cached(kind, mats, compute)
        return Approx(res.value, res.accuracy)

    def w(self, x: np.ndarray) -> Approx:
        """Numerical radius."""
        return self._result("w", [x], lambda: radii._numerical_radius(x, self.cfg))

    def we(self, *xs: np.ndarray) -> Approx:
        """Euclidean operator radius of the tuple."""
        return self._result("we", xs, lambda: radii._euclidean_radius(np.stack(xs), self.cfg))

    def ne(self, *xs: np.ndarray) -> Approx:
        """Euclidean operator norm of the tuple."""
        return self._result("ne", xs, lambda: radii._euclidean_norm(np.stack(xs), self.cfg))

    def bw(self, a: np.ndarray, b: np.ndarray) -> Approx:
        """Numerical radius of the anti-diagonal block ``[[0, a], [b*, 0]]``."""
        return self._result("bw", [a, b], lambda: radii._block_numerical_radius(a, b, self.cfg))

    def sup_re_norm(self, x: np.ndarray) -> Approx:
        """``sup_theta ||Re(e^{i theta} x)||``."""
        return self._result("srn", [x], lambda: radii.real_part_norm_sup(x, self.cfg))
