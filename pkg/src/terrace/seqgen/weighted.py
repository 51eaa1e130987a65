"""Monotonicity of the weighted sequence w_n = (n+1) a_n on a finite prefix."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..exact import Interval
from .families import DEFAULT_ORDER, SeriesOrder, diff_enclosure, value_enclosure


@dataclass
class MonotonicityReport:
    family: str
    n_max: int
    classification: str  # increasing | decreasing | neither | undecided
    first_violation_index: Optional[int] = None
    first_increase_violation: Optional[int] = None  # first n with w_{n+1} <= w_n certified
    first_decrease_violation: Optional[int] = None  # first n with w_{n+1} >= w_n certified
    constant: bool = False
    undecided_indices: list[int] = field(default_factory=list)

    @property
    def strictly_increasing(self) -> bool:
        return self.classification == "increasing"

    @property
    def strictly_decreasing(self) -> bool:
        return self.classification == "decreasing"


def weighted_step(s, n: int, order: SeriesOrder = DEFAULT_ORDER) -> Interval:
    """Enclosure of w_{n+1} - w_n = a_{n+1} - (n+1)(a_n - a_{n+1}), refined until its sign is decided."""
    iv = None
    for o in order.ladder():
        iv = value_enclosure(s, n + 1, o) - (n + 1) * diff_enclosure(s, n, o)
        if iv.is_point() or not iv.contains_zero():
            return iv
    return iv


def weighted_monotonicity(s, n_max: int, order: SeriesOrder = DEFAULT_ORDER) -> MonotonicityReport:
    """Classify {(n+1) a_n} for n <= n_max using certified interval comparisons only."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    inc_fail = dec_fail = None
    undecided = []
    constant = True
    for n in range(n_max):
        step = weighted_step(s, n, order)
        if not (step.is_point() and step.lo == 0):
            constant = False
        if step.certainly_le(0) and inc_fail is None:
            inc_fail = n
        if step.certainly_ge(0) and dec_fail is None:
            dec_fail = n
        if step.contains_zero() and not step.is_point():
            undecided.append(n)

    if inc_fail is not None and dec_fail is not None:
        cls, first = "neither", max(inc_fail, dec_fail)
    elif undecided:
        cls, first = "undecided", None
    elif inc_fail is None:
        cls, first = "increasing", None
    else:
        cls, first = "decreasing", None
    return MonotonicityReport(str(s), n_max, cls, first, inc_fail, dec_fail, constant, undecided)
