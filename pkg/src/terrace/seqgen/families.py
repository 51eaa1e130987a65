"""Generating sequences a_n = f(1/(n+k)) with rigorous value and difference enclosures."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from ..exact import Interval
from .series import DEFAULT_BITS, asin_difference_enclosure, elementary_enclosure

FAMILIES = ("cesaro", "ln1p", "tan", "sinh", "sin", "atan", "asin")

FLOAT_FUNCS: dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "cesaro": lambda x: x,
    "ln1p": np.log1p,
    "tan": np.tan,
    "sinh": np.sinh,
    "sin": np.sin,
    "atan": np.arctan,
    "asin": np.arcsin,
}

_SPEC_RE = re.compile(r"^\s*([a-z0-9_]+)\s*@\s*k\s*=\s*(-?\d+)\s*$")


class FamilySpecError(ValueError):
    pass


@dataclass(frozen=True)
class SeriesOrder:
    N: int = 2
    budget: int = 64

    def __post_init__(self):
        if self.N < 0 or self.N > self.budget:
            raise ValueError(f"need 0 <= N <= budget, got N={self.N}, budget={self.budget}")

    def doubled(self) -> Optional["SeriesOrder"]:
        if self.N >= self.budget:
            return None
        return SeriesOrder(min(max(2 * self.N, 1), self.budget), self.budget)

    def ladder(self):
        """Orders tried by adaptive refinement: N, 2N, 4N, ... capped at the budget."""
        o = self
        while o is not None:
            yield o
            o = o.doubled()


DEFAULT_ORDER = SeriesOrder()


@dataclass(frozen=True)
class SequenceFamily:
    family: str
    shift: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise FamilySpecError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.shift < 1:
            raise FamilySpecError("shift k must be a positive integer")
        if self.family == "asin" and self.shift < 2:
            raise FamilySpecError("asin is restricted to arguments <= 1/2, i.e. k >= 2")

    @property
    def spec(self) -> str:
        return f"{self.family}@k={self.shift}"

    def __str__(self):
        return self.spec

    def arg(self, n: int) -> Fraction:
        return Fraction(1, n + self.shift)

    def float_values(self, idx: np.ndarray) -> np.ndarray:
        return FLOAT_FUNCS[self.family](1.0 / (np.asarray(idx, dtype=float) + self.shift))

    # raw enclosures at a fixed order
    def _value(self, n: int, N: int, bits: int) -> Interval:
        x = self.arg(n)
        if self.family == "cesaro":
            return Interval.point(x)
        return elementary_enclosure(self.family, x, N, bits)

    def _diff(self, n: int, N: int, bits: int) -> Interval:
        m = n + self.shift
        f = self.family
        if f == "cesaro":
            return Interval.point(Fraction(1, m * (m + 1)))
        if f == "ln1p":
            # ln((m+1)^2 / (m (m+2))) = ln(1 + 1/(m (m+2)))
            return elementary_enclosure("ln1p", Fraction(1, m * (m + 2)), N, bits)
        if f == "atan":
            # atan(1/m) - atan(1/(m+1)) = atan(1/(m^2 + m + 1))
            return elementary_enclosure("atan", Fraction(1, m * m + m + 1), N, bits)
        if f == "asin":
            return asin_difference_enclosure(Fraction(1, m), Fraction(1, m + 1), N).round_out(bits)
        half_sum = Fraction(2 * m + 1, 2 * m * (m + 1))
        half_diff = Fraction(1, 2 * m * (m + 1))
        if f == "tan":
            # tan A - tan B = sin(A - B) / (cos A cos B)
            num = elementary_enclosure("sin", Fraction(1, m * (m + 1)), N, None)
            den = (elementary_enclosure("cos", Fraction(1, m), N, None)
                   * elementary_enclosure("cos", Fraction(1, m + 1), N, None))
            return (num / den).round_out(bits)
        if f == "sinh":
            # sinh A - sinh B = 2 cosh((A+B)/2) sinh((A-B)/2)
            iv = (elementary_enclosure("cosh", half_sum, N, None)
                  * elementary_enclosure("sinh", half_diff, N, None))
            return (2 * iv).round_out(bits)
        if f == "sin":
            iv = (elementary_enclosure("cos", half_sum, N, None)
                  * elementary_enclosure("sin", half_diff, N, None))
            return (2 * iv).round_out(bits)
        raise AssertionError(f)


@dataclass(frozen=True)
class CustomFamily:
    """Extension hook: any positive sequence given by enclosure callables.

    ``value(n, N)`` and optionally ``diff(n, N)`` return Intervals; without
    ``diff`` the difference of value enclosures is used. Tail certificates are
    never available for custom families.
    """

    name: str
    value: Callable[[int, int], Interval]
    diff: Optional[Callable[[int, int], Interval]] = None
    float_fn: Optional[Callable[[np.ndarray], np.ndarray]] = field(default=None, compare=False)

    @property
    def spec(self) -> str:
        return f"custom:{self.name}"

    def __str__(self):
        return self.spec

    def float_values(self, idx: np.ndarray) -> np.ndarray:
        if self.float_fn is not None:
            return self.float_fn(np.asarray(idx))
        return np.array([float(self.value(int(i), DEFAULT_ORDER.budget).mid) for i in idx])

    def _value(self, n: int, N: int, bits: int) -> Interval:
        return self.value(n, N)

    def _diff(self, n: int, N: int, bits: int) -> Interval:
        if self.diff is not None:
            return self.diff(n, N)
        return self.value(n, N) - self.value(n + 1, N)


def parse_family(spec: str) -> SequenceFamily:
    """Parse ``<family>@k=<int>``, e.g. ``tan@k=2``."""
    m = _SPEC_RE.match(spec)
    if not m:
        raise FamilySpecError(f"bad family spec {spec!r}; expected <family>@k=<int>")
    return SequenceFamily(m.group(1), int(m.group(2)))


def _adaptive(raw, n, order, width, bits):
    iv = None
    for o in order.ladder():
        iv = raw(n, o.N, bits)
        if width is None or iv.width <= width:
            return iv
    return iv.flagged()


def value_enclosure(s, n: int, order: SeriesOrder = DEFAULT_ORDER,
                    width: Fraction | None = None, bits: int = DEFAULT_BITS) -> Interval:
    """Interval containing a_n.

    With ``width`` the order doubles from ``order.N`` until the interval is
    narrow enough; if the budget runs out first the (still sound) interval is
    returned with ``exhausted`` set.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    return _adaptive(s._value, n, order, width, bits)


def diff_enclosure(s, n: int, order: SeriesOrder = DEFAULT_ORDER,
                   width: Fraction | None = None, bits: int = DEFAULT_BITS) -> Interval:
    """Interval containing a_n - a_{n+1}, from a cancellation-free identity where one exists."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    return _adaptive(s._diff, n, order, width, bits)
