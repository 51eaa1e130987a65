"""Sturm-certified proofs that the criterion holds for every index n >= n0.

Each schema replaces the transcendental factors of one criterion half by
truncated Maclaurin polynomials lying on the safe side, substitutes the
rational arguments 1/(n+k), ..., as rational functions of n, clears the
denominators and proves the resulting polynomial inequality on [n0, oo).

Every polynomial bound is validated before use:

* alternating truncations need the argument in (0, 1] on the ray and must
  end on the sign matching the claimed side;
* positive-term truncations are lower bounds for positive arguments;
* a positive-term truncation plus an extra majorant term is an upper bound
  only if the extra term dominates the remainder lemma T / (1 - q).

A factor multiplied into a product must be nonnegative: an upper bound of
f needs f >= 0 (certified through a positive lower bound), a lower bound
must itself be positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..exact import Certificate, PolyQ, RatFuncQ, poly_nonneg_on_ray, poly_positive_on_ray, substitute
from ..seqgen import SequenceFamily, maclaurin_poly, remainder_lemma, truncation_side
from ..seqgen.series import ALTERNATING, POSITIVE_TERMS

N_VAR = PolyQ.x()

# lower-bound order proving f(x) > 0, used before multiplying an upper bound of f into a product
_POSITIVITY_ORDER = {"ln1p": 2, "sin": 1, "cos": 1, "sinh": 0, "cosh": 0}


class TailSchemaError(ValueError):
    """The family has no tail schema."""


@dataclass(frozen=True)
class Factor:
    kind: str
    arg: str
    order: int
    side: str  # "lower" or "upper": where the polynomial sits relative to f(arg)
    extra: tuple = ()  # coefficients (ascending) added to the truncation
    power: int = 1

    def polynomial(self) -> PolyQ:
        return maclaurin_poly(self.kind, self.order) + PolyQ(self.extra)

    def label(self) -> str:
        extra = f" + ({PolyQ(self.extra)})" if self.extra else ""
        pw = f"^{self.power}" if self.power != 1 else ""
        return f"[{self.kind} T{self.order}{extra}]({self.arg}){pw}"


@dataclass(frozen=True)
class Schema:
    inequality_id: int
    family: str
    which: str  # which half of the criterion: "upper" or "lower"
    relation: str  # ">=" : coeff*num/den >= 1 ; "<=" : coeff*num/den <= 1
    coefficient: Fraction
    numerator: tuple
    denominator: tuple
    n0: int
    criterion_form: str


F = Fraction
X4_OVER_12 = (0, 0, 0, 0, F(2, 24))  # 2 x^4 / 4!
X3_OVER_3 = (0, 0, 0, F(2, 6))  # 2 x^3 / 3!

SCHEMAS = {
    ("ln1p", "upper"): Schema(
        2, "ln1p", "upper", ">=", F(1),
        (Factor("ln1p", "u", 4, "lower"),),
        (Factor("ln1p", "A", 5, "upper"), Factor("ln1p", "B", 5, "upper")),
        1, "ln(1+u) / (ln(1+A) ln(1+B)) >= 1, u = 1/((n+k)(n+k+2))"),
    ("ln1p", "lower"): Schema(
        3, "ln1p", "lower", "<=", F(1),
        (Factor("ln1p", "u", 3, "upper"),),
        (Factor("ln1p", "A", 2, "lower", power=2),),
        1, "ln(1+u) / ln(1+A)^2 <= 1"),
    ("tan", "upper"): Schema(
        4, "tan", "upper", ">=", F(1),
        (Factor("sin", "u", 1, "lower"),),
        (Factor("sin", "A", 2, "upper"), Factor("sin", "B", 2, "upper")),
        0, "sin(u) / (sin A sin B) >= 1, u = A - B = 1/((n+k)(n+k+1))"),
    ("tan", "lower"): Schema(
        5, "tan", "lower", "<=", F(1),
        (Factor("sin", "u", 0, "upper"), Factor("cos", "A", 0, "upper")),
        (Factor("sin", "A", 1, "lower", power=2), Factor("cos", "B", 1, "lower")),
        0, "sin(u) cos A / (sin^2 A cos B) <= 1"),
    ("sinh", "upper"): Schema(
        6, "sinh", "upper", ">=", F(2),
        (Factor("cosh", "c", 1, "lower"), Factor("sinh", "d", 1, "lower")),
        (Factor("sinh", "A", 1, "upper", X4_OVER_12), Factor("sinh", "B", 1, "upper", X4_OVER_12)),
        0, "2 cosh(c) sinh(d) / (sinh A sinh B) >= 1, c = (A+B)/2, d = (A-B)/2"),
    ("sinh", "lower"): Schema(
        7, "sinh", "lower", "<=", F(2),
        (Factor("cosh", "c", 1, "upper", X3_OVER_3), Factor("sinh", "d", 1, "upper", X4_OVER_12)),
        (Factor("sinh", "A", 1, "lower", power=2),),
        0, "2 cosh(c) sinh(d) / sinh^2 A <= 1"),
}

MIN_SHIFT = {"ln1p": 1, "tan": 2, "sinh": 2}


def arguments(family: str, k: int) -> dict[str, tuple[RatFuncQ, str]]:
    """The schema arguments as rational functions of n, with display labels."""
    m = N_VAR + k
    m1 = N_VAR + (k + 1)
    args = {
        "A": (RatFuncQ(PolyQ.const(1), m), f"1/(n+{k})"),
        "B": (RatFuncQ(PolyQ.const(1), m1), f"1/(n+{k + 1})"),
    }
    if family == "ln1p":
        args["u"] = (RatFuncQ(PolyQ.const(1), m * (N_VAR + (k + 2))), f"1/((n+{k})(n+{k + 2}))")
    elif family == "tan":
        args["u"] = (RatFuncQ(PolyQ.const(1), m * m1), f"1/((n+{k})(n+{k + 1}))")
    elif family == "sinh":
        args["c"] = (RatFuncQ(N_VAR.scale(2) + (2 * k + 1), (m * m1).scale(2)),
                     f"(2n+{2 * k + 1})/(2(n+{k})(n+{k + 1}))")
        args["d"] = (RatFuncQ(PolyQ.const(1), (m * m1).scale(2)), f"1/(2(n+{k})(n+{k + 1}))")
    return args


@dataclass
class SideCondition:
    label: str
    certificate: Certificate

    @property
    def holds(self) -> bool:
        return self.certificate.holds


@dataclass
class MajorantLemma:
    """One validated use of a polynomial bound in place of f(argument)."""

    function: str
    argument: str
    order: int
    side: str
    rule: str
    polynomial: PolyQ
    conditions: list[SideCondition] = field(default_factory=list)
    side_matches: bool = True

    @property
    def valid(self) -> bool:
        return self.side_matches and all(c.holds for c in self.conditions)


def _nonneg_rf(rf: RatFuncQ, n0: int, label: str) -> list[SideCondition]:
    """rf >= 0 on [n0, oo): numerator nonnegative, (monic) denominator positive."""
    out = [SideCondition(f"{label}: denominator > 0", poly_positive_on_ray(rf.den, n0))]
    if rf.num.is_zero():
        return out
    out.append(SideCondition(f"{label}: numerator >= 0", poly_nonneg_on_ray(rf.num, n0)))
    return out


def _positive_rf(rf: RatFuncQ, n0: int, label: str) -> list[SideCondition]:
    if rf.num.is_zero():
        return [SideCondition(f"{label}: identically zero", Certificate(False, Fraction(n0), strict=True))]
    return [SideCondition(f"{label}: denominator > 0", poly_positive_on_ray(rf.den, n0)),
            SideCondition(f"{label}: numerator > 0", poly_positive_on_ray(rf.num, n0))]


def validate_bound(kind: str, order: int, side: str, extra: tuple, arg: RatFuncQ, arg_label: str,
                   n0: int) -> MajorantLemma:
    """Check that truncation_order(kind) + extra lies on ``side`` of kind(arg(n)) for all n >= n0."""
    poly = maclaurin_poly(kind, order) + PolyQ(extra)
    conds = _positive_rf(arg, n0, f"{arg_label} > 0")
    if kind in ALTERNATING:
        rule = "alternating"
        conds += _nonneg_rf(1 - arg, n0, f"{arg_label} <= 1")
        matches = not extra and truncation_side(kind, order) == side
    elif kind in POSITIVE_TERMS and side == "lower":
        rule = "positive-terms"
        matches = not extra
    elif kind in POSITIVE_TERMS:
        rule = "remainder-lemma"
        T, q = remainder_lemma(kind, order)
        one_minus_q = 1 - substitute(q, arg)
        conds += _positive_rf(one_minus_q, n0, f"q({arg_label}) < 1")
        slack = substitute(PolyQ(extra), arg) - substitute(T, arg) / one_minus_q
        conds += _nonneg_rf(slack, n0, f"extra term dominates remainder at {arg_label}")
        matches = True
    else:
        raise ValueError(f"no bracketing rule for {kind}")
    return MajorantLemma(kind, arg_label, order, side, rule, poly, conds, matches)


@dataclass
class TailCertificate:
    inequality_id: int
    family: str
    which: str
    relation: str
    n0: int
    criterion_form: str
    reduced_numerator: PolyQ
    cleared_denominator: PolyQ
    sturm_outcome: Certificate
    majorant_lemmas: list[MajorantLemma]
    side_conditions: list[SideCondition]
    factors: list[str]

    @property
    def valid(self) -> bool:
        return (self.sturm_outcome.holds
                and all(m.valid for m in self.majorant_lemmas)
                and all(c.holds for c in self.side_conditions))

    @property
    def failures(self) -> list[str]:
        out = [c.label for c in self.side_conditions if not c.holds]
        for m in self.majorant_lemmas:
            if not m.side_matches:
                out.append(f"{m.function}({m.argument}) order {m.order} is not a {m.side} bound")
            out += [f"{m.function}({m.argument}): {c.label}" for c in m.conditions if not c.holds]
        if not self.sturm_outcome.holds:
            out.append(f"reduced numerator negative at n = {self.sturm_outcome.witness}")
        return out


def schema_for(s) -> tuple[Schema, Schema]:
    if not isinstance(s, SequenceFamily) or s.family not in MIN_SHIFT or s.shift < MIN_SHIFT[s.family]:
        raise TailSchemaError(f"no tail schema for {s}")
    return SCHEMAS[(s.family, "upper")], SCHEMAS[(s.family, "lower")]


def _product(factors, args, n0, lemmas) -> RatFuncQ:
    out = RatFuncQ.const(1)
    for f in factors:
        arg, label = args[f.arg]
        lemmas.append(validate_bound(f.kind, f.order, f.side, f.extra, arg, label, n0))
        value = substitute(f.polynomial(), arg)
        if f.side == "lower":
            # a lower bound enters a product only if it is itself positive
            lemmas[-1].conditions += _positive_rf(value, n0, f"{f.kind} T{f.order}({label}) > 0")
        else:
            pos = validate_bound(f.kind, _POSITIVITY_ORDER[f.kind], "lower", (), arg, label, n0)
            pos.conditions += _positive_rf(substitute(pos.polynomial, arg), n0,
                                           f"{f.kind}({label}) > 0 via T{pos.order}")
            lemmas.append(pos)
        out = out * value ** f.power
    return out


def tail_certificate(s, which: str) -> TailCertificate:
    """Prove one half ('upper' or 'lower') of the criterion for all n >= n0."""
    if which not in ("upper", "lower"):
        raise ValueError("which must be 'upper' or 'lower'")
    upper, lower = schema_for(s)
    sch = upper if which == "upper" else lower
    args = arguments(s.family, s.shift)
    n0 = sch.n0
    lemmas: list[MajorantLemma] = []
    num = _product(sch.numerator, args, n0, lemmas) * sch.coefficient
    den = _product(sch.denominator, args, n0, lemmas)

    side = _positive_rf(den, n0, "bounded denominator > 0")
    if sch.relation == ">=":
        gap = num - den
    else:
        side += _nonneg_rf(num, n0, "bounded numerator >= 0")
        gap = den - num
    side.append(SideCondition("cleared denominator > 0", poly_positive_on_ray(gap.den, n0)))
    reduced = gap.num.content_primitive()
    outcome = poly_nonneg_on_ray(reduced, n0) if not reduced.is_zero() else Certificate(True, Fraction(n0))
    return TailCertificate(sch.inequality_id, s.spec, which, sch.relation, n0, sch.criterion_form,
                           reduced, gap.den, outcome, lemmas, side,
                           [f.label() for f in sch.numerator + sch.denominator])
