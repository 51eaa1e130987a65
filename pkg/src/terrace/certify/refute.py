"""Refutation of hyponormality through a certified lower bound on ||(M - I) e_0||^2.

If the spectrum of M is the disk |lambda - 1| <= 1, then M - I has spectral
radius 1; a hyponormal M would make M - I hyponormal, hence normaloid, hence
||M - I|| = 1. A rational L < ||(M - I) e_0||^2 with L > 1 contradicts that.

Column 0 of M - I is (a_0 - 1, a_1, a_2, ...), so
||(M - I) e_0||^2 = (a_0 - 1)^2 + sum_{n>=1} a_n^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..exact import Interval, PolyQ, RatFuncQ, substitute
from ..seqgen import DEFAULT_ORDER, SequenceFamily, maclaurin_poly, value_enclosure
from ..seqgen.families import SeriesOrder
from .tails import SideCondition, _nonneg_rf, _positive_rf, validate_bound

THRESHOLD = Fraction(1)
LAMBDA = Fraction(1)
DEFAULT_SPLIT = 1000
PARTIAL_SUM_TERMS = 400


def zeta_tail_enclosure(s: int, n_split: int) -> Interval:
    """Enclosure of zeta(s) - 1 = sum_{m>=2} m^-s.

    Exact partial sum through n_split, plus the integral-test bracket
    [(n_split+1)^(1-s)/(s-1), n_split^(1-s)/(s-1)] for the rest.
    """
    if s < 2:
        raise ValueError("zeta tail needs s >= 2")
    if n_split < 2:
        raise ValueError("n_split must be at least 2")
    partial = sum(Fraction(1, m**s) for m in range(2, n_split + 1))
    lo = Fraction(1, (s - 1) * (n_split + 1) ** (s - 1))
    hi = Fraction(1, (s - 1) * n_split ** (s - 1))
    return Interval(partial + lo, partial + hi)


def power_sum_from(s: int, start: int, n_split: int = DEFAULT_SPLIT) -> Interval:
    """sum_{m >= start} m^-s for start >= 2."""
    head = sum((Fraction(1, m**s) for m in range(2, start)), Fraction(0))
    return zeta_tail_enclosure(s, max(n_split, start)) - head


# a_n >= x + c x^3 with x = 1/(n+k); the lemma is checked from the bracketing rules below
CUBIC_MINORANTS = {
    "cesaro": Fraction(0),
    "tan": Fraction(1, 3),
    "sinh": Fraction(1, 6),
    "asin": Fraction(1, 6),
    "sin": Fraction(-1, 6),
    "atan": Fraction(-1, 3),
}


@dataclass
class RefutationRecord:
    family: str
    succeeded: bool
    method: str  # "cubic-minorant" or "partial-sum"
    column_norm_sq_lower: Fraction
    a0_term: Interval
    lambda_: Fraction = LAMBDA
    threshold: Fraction = THRESHOLD
    minorant_coefficient: Optional[Fraction] = None
    zeta_terms: list[tuple[int, Interval]] = field(default_factory=list)
    lemma_conditions: list[SideCondition] = field(default_factory=list)
    reason: str = ""


def _cubic_lemma(s: SequenceFamily, c: Fraction) -> list[SideCondition]:
    """Certify f(x) >= x + c x^3 >= 0 for x = 1/(n+k), n >= 1."""
    n0 = 1
    x = RatFuncQ(PolyQ.const(1), PolyQ.x() + s.shift)
    label = f"1/(n+{s.shift})"
    cubic = PolyQ([0, 1, 0, c])
    conds = _nonneg_rf(substitute(cubic, x), n0, "x + c x^3 >= 0")
    if s.family == "cesaro":
        return conds
    if s.family == "tan":
        # tan x = sin x / cos x >= x + x^3/3  <=  sin x >= T1_sin(x) >= (x + x^3/3) T2_cos(x) >= (x + x^3/3) cos x
        sin_lo = validate_bound("sin", 1, "lower", (), x, label, n0)
        cos_hi = validate_bound("cos", 2, "upper", (), x, label, n0)
        cos_pos = validate_bound("cos", 1, "lower", (), x, label, n0)
        conds += sin_lo.conditions + cos_hi.conditions + cos_pos.conditions
        conds += _positive_rf(substitute(maclaurin_poly("cos", 1), x), n0, "cos x > 0 via T1")
        gap = maclaurin_poly("sin", 1) - cubic * maclaurin_poly("cos", 2)
        conds += _nonneg_rf(substitute(gap, x), n0, "T1_sin - (x + x^3/3) T2_cos >= 0")
        return conds
    # x + c x^3 is the order-1 truncation itself, a lower bound by the bracketing rules
    lemma = validate_bound(s.family, 1, "lower", (), x, label, n0)
    if maclaurin_poly(s.family, 1) != cubic or not lemma.side_matches:
        raise AssertionError(f"cubic minorant for {s.family} is not its order-1 lower truncation")
    return conds + lemma.conditions


def refute_by_normaloid(s, order: SeriesOrder = DEFAULT_ORDER, n_split: int = DEFAULT_SPLIT) -> RefutationRecord:
    """Try to certify ||(M - I) e_0||^2 > 1; ``succeeded`` is False when the bound is inconclusive."""
    a0 = value_enclosure(s, 0, SeriesOrder(order.budget, order.budget))
    a0_term = (a0 - LAMBDA).sqr()
    family = getattr(s, "family", None)

    if isinstance(s, SequenceFamily) and family in CUBIC_MINORANTS:
        c = CUBIC_MINORANTS[family]
        conds = _cubic_lemma(s, c)
        start = s.shift + 1  # n >= 1 means m = n + k >= k + 1
        z2, z4, z6 = (power_sum_from(p, start, n_split) for p in (2, 4, 6))
        tail = z2 + 2 * c * z4 + c * c * z6
        bound = a0_term + tail
        L = bound.lo
        ok = all(cd.holds for cd in conds) and L > THRESHOLD
        reason = "" if ok else ("minorant lemma failed" if not all(cd.holds for cd in conds)
                                else "lower bound does not exceed 1")
        return RefutationRecord(s.spec, ok, "cubic-minorant", L, a0_term, minorant_coefficient=c,
                                zeta_terms=[(2, z2), (4, z4), (6, z6)], lemma_conditions=conds, reason=reason)

    # no closed minorant: drop the tail and keep certified partial sums
    total = a0_term.lo
    for n in range(1, PARTIAL_SUM_TERMS + 1):
        total += value_enclosure(s, n, order).sqr().lo
    ok = total > THRESHOLD
    return RefutationRecord(str(s), ok, "partial-sum", total, a0_term,
                            reason="" if ok else "lower bound does not exceed 1")
