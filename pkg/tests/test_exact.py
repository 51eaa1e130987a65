from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from terrace.exact import (
    INF,
    IndeterminateQuotient,
    Interval,
    PolyQ,
    RatFuncQ,
    odd_multiplicity_part,
    poly_eval,
    poly_eval_interval,
    poly_nonneg_on_ray,
    poly_positive_on_ray,
    sturm_roots,
    substitute,
)
from terrace.seqgen import maclaurin_poly

x = PolyQ.x()


def test_interval_examples():
    assert Interval.point(F(1, 2)) + Interval.point(F(1, 3)) == Interval(F(5, 6), F(5, 6))
    assert Interval(-1, 2) * Interval(3, 4) == Interval(-4, 8)
    with pytest.raises(IndeterminateQuotient, match="indeterminate quotient"):
        Interval(1, 2) / Interval(0, 1)


def test_interval_rejects_floats_and_empty():
    with pytest.raises(TypeError):
        Interval(0.5, 1)
    with pytest.raises(ValueError):
        Interval(2, 1)


def test_round_out_widens():
    iv = Interval(F(1, 3), F(2, 3)).round_out(16)
    assert iv.lo <= F(1, 3) and iv.hi >= F(2, 3)
    assert iv.lo.denominator <= 2**16
    assert Interval.point(F(1, 4)).round_out(8) == Interval.point(F(1, 4))


def test_sqr_is_tight():
    assert Interval(-1, 2).sqr() == Interval(0, 4)
    assert (Interval(-1, 2) * Interval(-1, 2)) == Interval(-2, 4)


def _rand_interval(rng):
    c = F(rng.randint(-50, 50), rng.randint(1, 20))
    r = F(rng.randint(0, 10), rng.randint(1, 40))
    return Interval(c - r, c + r)


def _rand_tree(rng, depth):
    if depth == 0 or rng.random() < 0.25:
        return ("leaf", _rand_interval(rng))
    op = rng.choice(["add", "sub", "mul", "div", "neg", "sqr"])
    if op in ("neg", "sqr"):
        return (op, _rand_tree(rng, depth - 1))
    return (op, _rand_tree(rng, depth - 1), _rand_tree(rng, depth - 1))


def _eval(tree, choose):
    op = tree[0]
    if op == "leaf":
        return choose(tree[1])
    if op == "neg":
        return -_eval(tree[1], choose)
    if op == "sqr":
        v = _eval(tree[1], choose)
        return v.sqr() if isinstance(v, Interval) else v * v
    a, b = _eval(tree[1], choose), _eval(tree[2], choose)
    return {"add": a + b, "sub": a - b, "mul": a * b}[op] if op != "div" else a / b


def test_outward_soundness_random_trees(rng):
    points = 0
    while points < 10_000:
        tree = _rand_tree(rng, 3)
        try:
            enclosure = _eval(tree, lambda iv: iv)
        except IndeterminateQuotient:
            continue
        for _ in range(20):
            def pick(iv):
                t = F(rng.randint(0, 1000), 1000)
                return iv.lo + t * (iv.hi - iv.lo)

            try:
                v = _eval(tree, pick)
            except ZeroDivisionError:
                continue
            assert enclosure.contains(v)
            points += 1


def test_poly_eval_examples():
    assert poly_eval(maclaurin_poly("ln1p", 2), F(1, 2)) == F(3, 8)
    assert poly_eval(maclaurin_poly("sin", 1), F(1)) == F(5, 6)


def test_poly_eval_interval_contains_grid():
    p2 = maclaurin_poly("ln1p", 2)
    enc = poly_eval_interval(p2, Interval(0, F(1, 2)))
    assert enc.contains(Interval(0, F(3, 8)))
    for i in range(1001):
        assert enc.contains(poly_eval(p2, F(i, 2000)))


def test_polynomial_arithmetic():
    p = (x - 1) * (x + 2)
    q, r = p.divmod(x - 1)
    assert q == x + 2 and r.is_zero()
    assert p.derivative() == 2 * x + 1
    assert PolyQ([1, 2, 0, 0]).degree == 1
    assert PolyQ([0]).is_zero()


def test_ratfunc_reduces():
    rf = RatFuncQ((x - 1) * (x + 3), (x - 1) * (x + 5))
    assert rf.num == x + 3 and rf.den == x + 5
    assert substitute(x * x, RatFuncQ(PolyQ.const(1), x + 1)) == RatFuncQ(PolyQ.const(1), (x + 1) ** 2)


def test_sturm_examples():
    assert sturm_roots(x * x - 2, 0, 2) == 1
    assert sturm_roots((x - 1) ** 2, 0, 2) == 1
    assert sturm_roots(x * x + 1, -INF, INF) == 0
    with pytest.raises(ValueError):
        sturm_roots(PolyQ(), 0, 1)


def test_sturm_half_open_interval():
    p = (x - 1) * (x - 2)
    assert sturm_roots(p, 1, 2) == 1  # 1 excluded, 2 included
    assert sturm_roots(p, 0, 1) == 1


def test_sturm_agrees_with_independent_root_isolation(rng):
    for _ in range(500):
        deg = rng.randint(1, 8)
        coeffs = [rng.randint(-10, 10) for _ in range(deg + 1)]
        if coeffs[-1] == 0:
            coeffs[-1] = rng.choice([-1, 1])
        p = PolyQ(coeffs)
        a = F(rng.randint(-30, 30), rng.randint(1, 4))
        b = a + F(rng.randint(1, 40), rng.randint(1, 4))
        t = sympy.Symbol("t")
        roots = set(sympy.Poly(list(reversed(coeffs)), t).real_roots())
        expected = sum(1 for r in roots if a < r <= b)
        assert sturm_roots(p, a, b) == expected, (coeffs, a, b)
        assert sturm_roots(p, a, INF) == sum(1 for r in roots if r > a)


def test_nonneg_on_ray_examples():
    assert poly_nonneg_on_ray(x * x - 2, 2).holds
    cert = poly_nonneg_on_ray(x * x - 2, 0)
    assert not cert.holds and cert.witness is not None
    assert cert.witness >= 0 and poly_eval(x * x - 2, cert.witness) < 0


def test_nonneg_with_touching_root():
    p = (x - 3) ** 2 * (x + 1)
    assert poly_nonneg_on_ray(p, 0).holds
    assert not poly_positive_on_ray(p, 0).holds
    q = (x - 3) ** 3 * (x + 1)
    cert = poly_nonneg_on_ray(q, 0)
    assert not cert.holds and poly_eval(q, cert.witness) < 0


def test_witness_interior_violation():
    # negative only on (2, 3)
    p = (x - 2) * (x - 3)
    cert = poly_nonneg_on_ray(p, 0)
    assert not cert.holds
    assert 2 < cert.witness < 3


def test_odd_multiplicity_part():
    p = (x - 3) ** 2 * (x - 1) ** 3 * (x + 2)
    assert odd_multiplicity_part(p) == ((x - 1) * (x + 2)).monic()


def test_ln1p_lower_tail_numerator_nonneg_and_sampled():
    # ln1p lower half, k = 1: p2(1/(n+1))^2 - p3(1/((n+1)(n+3))) >= 0 for n >= 1
    A = RatFuncQ(PolyQ.const(1), x + 1)
    u = RatFuncQ(PolyQ.const(1), (x + 1) * (x + 3))
    gap = substitute(maclaurin_poly("ln1p", 2), A) ** 2 - substitute(maclaurin_poly("ln1p", 3), u)
    num = gap.num.content_primitive()
    assert poly_nonneg_on_ray(num, 1).holds
    ints = [int(c) for c in num.coeffs]
    for n in range(1, 10**6 + 1, 7):
        acc = 0
        for c in reversed(ints):
            acc = acc * n + c
        assert acc >= 0


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-10, 10), min_size=2, max_size=7), st.integers(-5, 5))
def test_nonneg_certificate_is_sound(coeffs, a):
    p = PolyQ(coeffs)
    if p.is_zero():
        return
    cert = poly_nonneg_on_ray(p, a)
    if cert.holds:
        import random

        r = random.Random(sum(coeffs) + a)
        for _ in range(1000):
            t = a + F(r.randint(0, 10**6), r.randint(1, 1000))
            assert poly_eval(p, t) >= 0
    elif cert.witness is not None:
        assert cert.witness >= a and poly_eval(p, cert.witness) < 0
