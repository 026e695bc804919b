"""Scalars that carry an absolute error bound through arithmetic.

Term evaluators combine optimizer outputs (each with an ``accuracy``) using
ordinary operators; the propagated ``err`` is a first-order-safe bound on
the distance between the computed value and the exact one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Approx:
    value: float
    err: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "err", float(abs(self.err)))

    @staticmethod
    def of(x) -> "Approx":
        return x if isinstance(x, Approx) else Approx(float(x), 0.0)

    def __add__(self, other):
        o = Approx.of(other)
        return Approx(self.value + o.value, self.err + o.err)

    __radd__ = __add__

    def __sub__(self, other):
        o = Approx.of(other)
        return Approx(self.value - o.value, self.err + o.err)

    def __rsub__(self, other):
        return Approx.of(other) - self

    def __neg__(self):
        return Approx(-self.value, self.err)

    def __abs__(self):
        return Approx(abs(self.value), self.err)

    def __mul__(self, other):
        o = Approx.of(other)
        err = abs(self.value) * o.err + abs(o.value) * self.err + self.err * o.err
        return Approx(self.value * o.value, err)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Approx.of(other)
        if o.err:
            raise ValueError("division by an uncertain quantity is not supported")
        return Approx(self.value / o.value, self.err / abs(o.value))

    def __pow__(self, p):
        p = float(p)
        if p == 0.5:
            return sqrt(self)
        if p < 1:
            raise ValueError("only powers >= 1 and 1/2 are supported")
        v = self.value
        if v < 0 and p != int(p):
            raise ValueError("fractional power of a negative quantity")
        # mean value theorem on [|v| - err, |v| + err]
        err = p * (abs(v) + self.err) ** (p - 1) * self.err
        return Approx(v**p, err)


def sqrt(x) -> Approx:
    """Square root, clamping tiny negative radicands (roundoff) to zero."""
    x = Approx.of(x)
    v = max(x.value, 0.0)
    root = math.sqrt(v)
    if x.err == 0.0:
        return Approx(root, 0.0)
    lo = math.sqrt(max(v - x.err, 0.0))
    hi = math.sqrt(v + x.err)
    return Approx(root, max(root - lo, hi - root))


def maximum(*xs) -> Approx:
    items = [Approx.of(x) for x in xs]
    best = max(items, key=lambda a: a.value)
    return Approx(best.value, max(a.err for a in items))
