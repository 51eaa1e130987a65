from fractions import Fraction as F

import mpmath
import pytest

from terrace.exact import PolyQ, RatFuncQ, poly_eval
from terrace.certify import (
    CERTIFIED,
    FAILS,
    REFUTED,
    UNDECIDED,
    TailSchemaError,
    certify,
    check_criterion_at,
    check_prefix,
    corollary_holds,
    power_sum_from,
    refute_by_normaloid,
    tail_certificate,
    theorem_string_holds,
    validate_bound,
    zeta_tail_enclosure,
)
from terrace.seqgen import SequenceFamily, SeriesOrder, value_enclosure

mpmath.mp.dps = 50
x = PolyQ.x()


def test_theorem_string_and_corollary_examples():
    # cesaro: a_{n+1} = a_n / (1 + a_n) exactly
    assert theorem_string_holds(F(1, 2), F(1, 3)) and corollary_holds(F(1, 2), F(1, 3))
    assert not theorem_string_holds(F(1, 2), F(2, 5))
    assert not corollary_holds(F(1, 2), F(1, 5))


def test_criterion_examples():
    v = check_criterion_at(SequenceFamily("cesaro", 1), 0)
    assert v.holds and v.upper_margin.lo == 1 == v.upper_margin.hi
    v = check_criterion_at(SequenceFamily("sin", 1), 0)
    assert v.upper_check == FAILS and v.upper_margin.hi < 1
    assert abs(float(v.upper_margin.mid) - 0.897) < 1e-3


def test_prefix_examples():
    res = check_prefix(SequenceFamily("ln1p", 1), 20)
    assert res.all_hold and res.hypothesis.ok
    res = check_prefix(SequenceFamily("sinh", 1), 5)
    assert res.hypothesis.a0_in_unit == FAILS and not res.verdicts
    res = check_prefix(SequenceFamily("atan", 1), 5)
    assert res.first_failure == 0
    with pytest.raises(ValueError):
        check_prefix(SequenceFamily("ln1p", 1), -1)


@pytest.mark.parametrize("fam,k,ids,n0", [("ln1p", 1, (2, 3), 1), ("tan", 2, (4, 5), 0),
                                          ("sinh", 2, (6, 7), 0), ("tan", 3, (4, 5), 0),
                                          ("sinh", 3, (6, 7), 0)])
def test_tail_certificates_valid(fam, k, ids, n0):
    s = SequenceFamily(fam, k)
    up, lo = tail_certificate(s, "upper"), tail_certificate(s, "lower")
    assert (up.inequality_id, lo.inequality_id) == ids
    assert up.valid and lo.valid and up.n0 == lo.n0 == n0
    assert up.sturm_outcome.holds and not up.failures


def test_sinh_tails_use_remainder_lemma():
    t = tail_certificate(SequenceFamily("sinh", 2), "upper")
    t2 = tail_certificate(SequenceFamily("sinh", 2), "lower")
    rules = {m.rule for m in t.majorant_lemmas + t2.majorant_lemmas}
    assert "remainder-lemma" in rules
    assert all(m.valid for m in t.majorant_lemmas + t2.majorant_lemmas)


def test_tail_schema_missing():
    for s in (SequenceFamily("sin", 1), SequenceFamily("tan", 1), SequenceFamily("cesaro", 1)):
        with pytest.raises(TailSchemaError):
            tail_certificate(s, "upper")
    with pytest.raises(ValueError):
        tail_certificate(SequenceFamily("ln1p", 1), "middle")


def test_wrong_side_majorant_rejected():
    arg = RatFuncQ(PolyQ.const(1), x + 1)
    assert validate_bound("ln1p", 3, "upper", (), arg, "1/(n+1)", 1).valid
    assert not validate_bound("ln1p", 3, "lower", (), arg, "1/(n+1)", 1).valid
    assert not validate_bound("sin", 1, "upper", (), arg, "1/(n+1)", 0).valid
    # an upper bound for sinh without enough slack is rejected
    assert not validate_bound("sinh", 1, "upper", (), arg, "1/(n+1)", 0).valid
    big = RatFuncQ(PolyQ.const(2), PolyQ.const(1))
    assert not validate_bound("sin", 1, "lower", (), big, "2", 0).valid


def test_zeta_tail_against_oracle():
    for s in (2, 3, 4, 6):
        iv = zeta_tail_enclosure(s, 200)
        z = mpmath.zeta(s) - 1
        assert iv.lo <= F(str(mpmath.nstr(z, 45))) <= iv.hi
        assert iv.width < F(1, 10**4)
    assert power_sum_from(2, 3).contains(F(str(mpmath.nstr(mpmath.zeta(2) - 1 - F(1, 4), 45))))
    with pytest.raises(ValueError):
        zeta_tail_enclosure(1, 100)


def _column_norm_oracle(s):
    f = {"tan": mpmath.tan, "sinh": mpmath.sinh, "cesaro": lambda t: t, "ln1p": mpmath.log1p}[s.family]
    a0 = f(mpmath.mpf(1) / s.shift)
    tail = mpmath.nsum(lambda n: f(1 / (n + s.shift)) ** 2, [1, mpmath.inf])
    return (a0 - 1) ** 2 + tail


def test_refutation_tan1():
    s = SequenceFamily("tan", 1)
    r = refute_by_normaloid(s)
    assert r.succeeded and r.method == "cubic-minorant"
    L = r.column_norm_sq_lower
    assert F(1012, 1000) <= L <= F(1013, 1000) and L > F(101, 100)
    assert all(c.holds for c in r.lemma_conditions)
    closed_form = ((mpmath.tan(1) - 1) ** 2 + (mpmath.zeta(2) - 1) + mpmath.mpf(2) / 3 * (mpmath.zeta(4) - 1)
                    + mpmath.mpf(1) / 9 * (mpmath.zeta(6) - 1))
    assert abs(float(L) - float(closed_form)) < 1e-5
    assert float(L) <= float(_column_norm_oracle(s))


@pytest.mark.parametrize("fam,k", [("tan", 2), ("sinh", 2), ("cesaro", 1), ("ln1p", 1)])
def test_refutation_inconclusive_below_oracle(fam, k):
    s = SequenceFamily(fam, k)
    r = refute_by_normaloid(s)
    assert not r.succeeded and r.reason
    assert float(r.column_norm_sq_lower) <= float(_column_norm_oracle(s))


@pytest.mark.parametrize("fam,k", [("ln1p", 1), ("tan", 2), ("sinh", 2)])
def test_certify_examples(fam, k):
    rep = certify(SequenceFamily(fam, k))
    assert rep.verdict == CERTIFIED
    assert rep.refutation is None


@pytest.mark.parametrize("fam,k,expected", [("tan", 1, REFUTED), ("sin", 1, UNDECIDED), ("atan", 1, UNDECIDED),
                                            ("sinh", 1, UNDECIDED), ("cesaro", 1, UNDECIDED),
                                            ("asin", 2, UNDECIDED)])
def test_certify_non_certified(fam, k, expected):
    rep = certify(SequenceFamily(fam, k))
    assert rep.verdict == expected
    assert rep.diagnostics


def test_sinh1_reports_hypothesis_violation():
    rep = certify(SequenceFamily("sinh", 1))
    assert any("a_0" in d for d in rep.diagnostics)
    assert rep.hypothesis.a0_in_unit == FAILS


# invariants

@pytest.mark.parametrize("fam,k", [("ln1p", 1), ("tan", 2), ("sinh", 2)])
def test_tail_and_prefix_agree_on_overlap(fam, k):
    s = SequenceFamily(fam, k)
    for n in list(range(0, 60)) + list(range(60, 2000, 47)):
        v = check_criterion_at(s, n)
        if n >= tail_certificate(s, "upper").n0:
            assert v.holds, n


def test_monotone_strengthening():
    s = SequenceFamily("ln1p", 1)
    orders = [SeriesOrder(N, N) for N in (2, 4, 8, 16, 32)]
    for n in (0, 3, 40):
        prev = None
        for o in orders:
            v = check_criterion_at(s, n, o)
            if prev is not None:
                for old, new in ((prev.lower_check, v.lower_check), (prev.upper_check, v.upper_check)):
                    assert old == UNDECIDED or old == new
                assert v.value.width <= prev.value.width
            prev = v


def test_theorem_form_equivalence_on_enclosure_midpoints():
    for fam, k in (("ln1p", 1), ("tan", 2), ("sin", 1), ("tan", 1)):
        s = SequenceFamily(fam, k)
        for n in range(0, 30):
            v = check_criterion_at(s, n, SeriesOrder(32, 32))
            if not v.decided:
                continue
            a = value_enclosure(s, n, SeriesOrder(32, 32)).mid
            b = value_enclosure(s, n + 1, SeriesOrder(32, 32)).mid
            assert theorem_string_holds(a, b) == v.holds


@pytest.mark.parametrize("fam,k", [("tan", 1), ("tan", 2), ("ln1p", 1), ("sinh", 2), ("sin", 1)])
def test_certified_and_refuted_are_exclusive(fam, k):
    rep = certify(SequenceFamily(fam, k))
    r = refute_by_normaloid(SequenceFamily(fam, k))
    assert not (rep.verdict == CERTIFIED and r.succeeded)


def test_exact_reduced_numerator_nonneg_at_integers():
    t = tail_certificate(SequenceFamily("tan", 2), "lower")
    for n in range(t.n0, 500):
        assert poly_eval(t.reduced_numerator, F(n)) >= 0
