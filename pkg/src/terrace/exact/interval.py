"""Closed intervals with exact rational endpoints.

All arithmetic is exact, so the result of every operation contains the
exact image of its operands without any rounding argument. ``round_out``
trades width for smaller denominators and is the only place endpoints move.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

Rat = Fraction
Number = Union[int, Fraction]


def as_rat(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def floor_to(x: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction((x.numerator * scale) // x.denominator, scale)


def ceil_to(x: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(-((-x.numerator * scale) // x.denominator), scale)


class IndeterminateQuotient(ZeroDivisionError):
    """Raised when dividing by an interval that contains zero."""


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    # set by adaptive enclosures that hit their order budget before the width target
    exhausted: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rat(self.lo))
        object.__setattr__(self, "hi", as_rat(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: Number) -> "Interval":
        x = as_rat(x)
        return cls(x, x)

    @classmethod
    def hull(cls, *xs: Number) -> "Interval":
        xs = [as_rat(x) for x in xs]
        return cls(min(xs), max(xs))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    __contains__ = contains

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def round_out(self, bits: int) -> "Interval":
        """Widen to endpoints on the 2**-bits grid (points stay exact when representable)."""
        return Interval(floor_to(self.lo, bits), ceil_to(self.hi, bits), self.exhausted)

    def flagged(self, exhausted: bool = True) -> "Interval":
        return Interval(self.lo, self.hi, exhausted)

    def _coerce(self, other) -> "Interval":
        if isinstance(other, Interval):
            return other
        return Interval.point(other)

    def __add__(self, other):
        o = self._coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi, self.exhausted or o.exhausted)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo, self.exhausted)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(products), max(products), self.exhausted or o.exhausted)

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if self.contains_zero():
            raise IndeterminateQuotient(f"indeterminate quotient: divisor {self} contains 0")
        return Interval(1 / self.hi, 1 / self.lo, self.exhausted)

    def __truediv__(self, other):
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def sqr(self) -> "Interval":
        """Square with the dependency problem removed (x*x would allow negatives)."""
        a, b = self.lo * self.lo, self.hi * self.hi
        if self.contains_zero():
            return Interval(0, max(a, b), self.exhausted)
        return Interval(min(a, b), max(a, b), self.exhausted)

    def __pow__(self, k: int):
        if k < 0:
            return (self ** -k).reciprocal()
        if k == 0:
            return Interval.point(1)
        if k % 2 == 0:
            return self.sqr() ** (k // 2) if k > 2 else self.sqr()
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    # Certified comparisons: True only when every point of the interval satisfies the relation.
    def certainly_le(self, x: Number) -> bool:
        return self.hi <= x

    def certainly_lt(self, x: Number) -> bool:
        return self.hi < x

    def certainly_ge(self, x: Number) -> bool:
        return self.lo >= x

    def certainly_gt(self, x: Number) -> bool:
        return self.lo > x

    def __float__(self):
        return float(self.mid)

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"

    def __str__(self):
        if self.is_point():
            return f"[{self.lo}]"
        return f"[{float(self.lo):.17g}, {float(self.hi):.17g}]"


def interval_add(a: Interval, b: Interval) -> Interval:
    return a + b


def interval_neg(a: Interval) -> Interval:
    return -a


def interval_mul(a: Interval, b: Interval) -> Interval:
    return a * b


def interval_div(a: Interval, b: Interval) -> Interval:
    return a / b
