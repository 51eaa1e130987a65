"""Pointwise checks of the terraced-matrix hyponormality criterion.

For a positive sequence strictly decreasing to 0 with 0 < a_0 <= 1, the
matrix is hyponormal when, for every n,

    (a_n - a_{n+1}) / a_n^2  <=  1  <=  (a_n - a_{n+1}) / (a_n a_{n+1}),

which rearranges to a_n (1 - a_n) <= a_{n+1} <= a_n / (1 + a_n).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..exact import Interval
from ..seqgen import DEFAULT_ORDER, SeriesOrder, diff_enclosure, value_enclosure

HOLDS, FAILS, UNDECIDED = "holds", "fails", "undecided"


def theorem_string_holds(an: Fraction, an1: Fraction) -> bool:
    """a_n (1 - a_n) <= a_{n+1} <= a_n / (1 + a_n), exactly."""
    return an * (1 - an) <= an1 <= an / (1 + an)


def corollary_holds(an: Fraction, an1: Fraction) -> bool:
    d = an - an1
    return d / (an * an) <= 1 <= d / (an * an1)


def _le_one(q: Interval) -> str:
    if q.certainly_le(1):
        return HOLDS
    if q.certainly_gt(1):
        return FAILS
    return UNDECIDED


def _ge_one(q: Interval) -> str:
    if q.certainly_ge(1):
        return HOLDS
    if q.certainly_lt(1):
        return FAILS
    return UNDECIDED


@dataclass
class CriterionVerdict:
    n: int
    lower_check: str
    upper_check: str
    lower_margin: Interval  # encloses (a_n - a_{n+1}) / a_n^2, must be <= 1
    upper_margin: Interval  # encloses (a_n - a_{n+1}) / (a_n a_{n+1}), must be >= 1
    value: Interval
    order: int

    @property
    def holds(self) -> bool:
        return self.lower_check == HOLDS and self.upper_check == HOLDS

    @property
    def fails(self) -> bool:
        return FAILS in (self.lower_check, self.upper_check)

    @property
    def decided(self) -> bool:
        return UNDECIDED not in (self.lower_check, self.upper_check)


def check_criterion_at(s, n: int, order: SeriesOrder = DEFAULT_ORDER) -> CriterionVerdict:
    """Decide both halves of the criterion at index n, doubling the order until decided or out of budget."""
    v = None
    for o in order.ladder():
        a = value_enclosure(s, n, o)
        b = value_enclosure(s, n + 1, o)
        d = diff_enclosure(s, n, o)
        lower = d / a.sqr()
        upper = d / (a * b)
        v = CriterionVerdict(n, _le_one(lower), _ge_one(upper), lower, upper, a, o.N)
        if v.decided:
            break
    return v


@dataclass
class HypothesisChecks:
    a0: Interval
    a0_in_unit: str  # is 0 < a_0 <= 1
    strict_decrease: str  # a_n - a_{n+1} > 0 on the checked prefix
    first_nonpositive_diff: Optional[int] = None
    checked_through: int = 0

    @property
    def ok(self) -> bool:
        return self.a0_in_unit == HOLDS and self.strict_decrease == HOLDS


@dataclass
class PrefixResult:
    family: str
    n_max: int
    hypothesis: HypothesisChecks
    verdicts: list[CriterionVerdict] = field(default_factory=list)

    @property
    def first_failure(self) -> Optional[int]:
        return next((v.n for v in self.verdicts if v.fails), None)

    @property
    def first_undecided(self) -> Optional[int]:
        return next((v.n for v in self.verdicts if not v.decided and not v.fails), None)

    @property
    def all_hold(self) -> bool:
        return len(self.verdicts) == self.n_max + 1 and all(v.holds for v in self.verdicts)

    @property
    def max_order(self) -> int:
        return max((v.order for v in self.verdicts), default=0)


def check_a0(s, order: SeriesOrder = DEFAULT_ORDER) -> tuple[Interval, str]:
    a0, verdict = None, UNDECIDED
    for o in order.ladder():
        a0 = value_enclosure(s, 0, o)
        if a0.lo > 0 and a0.hi <= 1:
            return a0, HOLDS
        if a0.lo > 1 or a0.hi <= 0:
            return a0, FAILS
    return a0, verdict


def check_prefix(s, n_max: int, order: SeriesOrder = DEFAULT_ORDER) -> PrefixResult:
    """Criterion at every n <= n_max plus the theorem hypotheses.

    Stops at the first certified failure, whether of a hypothesis or of the
    criterion itself.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    a0, a0_verdict = check_a0(s, order)
    hyp = HypothesisChecks(a0, a0_verdict, UNDECIDED)
    result = PrefixResult(str(s), n_max, hyp)
    if a0_verdict == FAILS:
        return result

    decrease = HOLDS
    for n in range(n_max + 1):
        d = diff_enclosure(s, n, order)
        if not d.certainly_gt(0):
            d = diff_enclosure(s, n, SeriesOrder(order.budget, order.budget))
        if not d.certainly_gt(0):
            decrease = FAILS if d.certainly_le(0) else UNDECIDED
            hyp.first_nonpositive_diff = n
            break
        hyp.checked_through = n
    hyp.strict_decrease = decrease
    if decrease == FAILS:
        return result

    for n in range(n_max + 1):
        v = check_criterion_at(s, n, order)
        result.verdicts.append(v)
        if v.fails:
            break
    return result
