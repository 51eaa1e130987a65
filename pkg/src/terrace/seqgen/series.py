"""Truncated Maclaurin polynomials and rigorous enclosures of elementary functions.

Two bracketing rules are used everywhere:

* alternating series whose terms shrink in magnitude: consecutive partial
  sums bracket the limit, and a truncation ending on a ``+`` term is an
  upper bound (``-`` term: lower bound);
* series of nonnegative terms: a truncation is a lower bound, and the tail
  after the last kept term is at most ``T / (1 - q)`` where ``T`` is the first
  omitted term and ``q`` bounds the ratio of consecutive omitted terms.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..exact import Interval, PolyQ, poly_eval

KINDS = ("ln1p", "sin", "cos", "sinh", "cosh", "atan", "asin")
ALTERNATING = frozenset({"ln1p", "sin", "cos", "atan"})
POSITIVE_TERMS = frozenset({"sinh", "cosh", "asin"})

DEFAULT_BITS = 256
ASIN_MAX_ARG = Fraction(1, 2)


def _asin_coeff(k: int) -> Fraction:
    return Fraction(factorial(2 * k), 4**k * factorial(k) ** 2 * (2 * k + 1))


def series_term(kind: str, k: int) -> PolyQ:
    """The k-th term (as a monomial with its sign) of the Maclaurin series of ``kind``."""
    if kind == "ln1p":
        if k < 1:
            raise ValueError("ln1p terms start at k = 1")
        deg, c = k, Fraction((-1) ** (k + 1), k)
    elif kind == "sin":
        deg, c = 2 * k + 1, Fraction((-1) ** k, factorial(2 * k + 1))
    elif kind == "cos":
        deg, c = 2 * k, Fraction((-1) ** k, factorial(2 * k))
    elif kind == "sinh":
        deg, c = 2 * k + 1, Fraction(1, factorial(2 * k + 1))
    elif kind == "cosh":
        deg, c = 2 * k, Fraction(1, factorial(2 * k))
    elif kind == "atan":
        deg, c = 2 * k + 1, Fraction((-1) ** k, 2 * k + 1)
    elif kind == "asin":
        deg, c = 2 * k + 1, _asin_coeff(k)
    else:
        raise ValueError(f"unknown series kind {kind!r}")
    return PolyQ([0] * deg + [c])


def maclaurin_poly(kind: str, N: int) -> PolyQ:
    """Truncated Maclaurin polynomial of order N.

    ``ln1p`` keeps terms k = 1..N (x - x^2/2 + ...); every other kind keeps
    k = 0..N, so ``sin`` of order 1 is x - x^3/6 and ``cosh`` of order 1 is
    1 + x^2/2.
    """
    if kind == "ln1p":
        if N < 1:
            raise ValueError("ln1p truncation needs N >= 1")
        ks = range(1, N + 1)
    else:
        if N < 0:
            raise ValueError("truncation order must be nonnegative")
        ks = range(0, N + 1)
    out = PolyQ()
    for k in ks:
        out = out + series_term(kind, k)
    return out


def truncation_side(kind: str, N: int) -> str:
    """Which side of f(x) the order-N truncation lies on, for x in the series' valid range."""
    if kind in POSITIVE_TERMS:
        return "lower"
    last = N
    sign = (-1) ** (last + 1) if kind == "ln1p" else (-1) ** last
    return "upper" if sign > 0 else "lower"


def alternating_valid_max(kind: str) -> Fraction:
    """Largest x for which the alternating terms are nonincreasing in magnitude (sufficient bound)."""
    if kind not in ALTERNATING:
        raise ValueError(f"{kind} is not an alternating series")
    return Fraction(1)


def remainder_lemma(kind: str, N: int) -> tuple[PolyQ, PolyQ]:
    """(T, q) with 0 <= f(x) - truncation_N(x) <= T(x) / (1 - q(x)) whenever 0 <= x and q(x) < 1.

    T is the first omitted term; q bounds every later term ratio:
    sinh  t_{j+1}/t_j = x^2/((2j+2)(2j+3)) <= x^2/((2N+4)(2N+5)) for j >= N+1,
    cosh  t_{j+1}/t_j = x^2/((2j+1)(2j+2)) <= x^2/((2N+3)(2N+4)),
    asin  t_{j+1}/t_j = x^2 (2j+1)^2/((2j+2)(2j+3)) <= x^2.
    """
    T = series_term(kind, N + 1)
    if kind == "sinh":
        q = PolyQ([0, 0, Fraction(1, (2 * N + 4) * (2 * N + 5))])
    elif kind == "cosh":
        q = PolyQ([0, 0, Fraction(1, (2 * N + 3) * (2 * N + 4))])
    elif kind == "asin":
        q = PolyQ([0, 0, 1])
    else:
        raise ValueError(f"no remainder lemma for {kind}")
    return T, q


def remainder_bound(kind: str, N: int, x: Fraction) -> Fraction:
    T, q = remainder_lemma(kind, N)
    qx = poly_eval(q, x)
    if qx >= 1:
        raise ValueError(f"remainder lemma for {kind} needs q(x) < 1, got {qx}")
    return poly_eval(T, x) / (1 - qx)


def _alternating(kind: str, x: Fraction, N: int) -> Interval:
    if not 0 <= x <= alternating_valid_max(kind):
        raise ValueError(f"{kind} bracketing needs 0 <= x <= 1, got {x}")
    s = poly_eval(maclaurin_poly(kind, N), x)
    nxt = s + poly_eval(series_term(kind, N + 1), x)
    return Interval.hull(s, nxt)


def _positive(kind: str, x: Fraction, N: int) -> Interval:
    if x < 0:
        raise ValueError(f"{kind} enclosure implemented for x >= 0")
    s = poly_eval(maclaurin_poly(kind, N), x)
    return Interval(s, s + remainder_bound(kind, N, x))


def _ln1p(x: Fraction, N: int) -> Interval:
    # ln(1+x) = 2 atanh(y), y = x/(2+x) <= 1/3 for x <= 1; terms 2 y^(2k+1)/(2k+1)
    if x < 0:
        raise ValueError("ln1p enclosure implemented for x >= 0")
    y = x / (2 + x)
    y2 = y * y
    s, p = Fraction(0), y
    for k in range(N + 1):
        s += p / (2 * k + 1)
        p *= y2
    tail = p / (2 * N + 3) / (1 - y2)
    return Interval(2 * s, 2 * (s + tail))


def _atan(x: Fraction, N: int) -> Interval:
    if x < 0:
        raise ValueError("atan enclosure implemented for x >= 0")
    half = Fraction(1, 2)
    if x <= half:
        return _alternating("atan", x, N)
    if x > 1:
        raise ValueError("atan enclosure implemented for 0 <= x <= 1")
    # atan x = atan(1/2) + atan((2x - 1)/(2 + x)), second argument <= 1/3
    return _alternating("atan", half, N) + _alternating("atan", (2 * x - 1) / (2 + x), N)


def elementary_enclosure(kind: str, x: Fraction, N: int, bits: int | None = DEFAULT_BITS) -> Interval:
    """Interval containing f(x) built from an order-N truncation, rounded outward to ``bits``."""
    x = Fraction(x)
    if kind == "ln1p":
        iv = _ln1p(x, N)
    elif kind == "atan":
        iv = _atan(x, N)
    elif kind == "asin":
        if x > ASIN_MAX_ARG:
            raise ValueError(f"asin enclosure restricted to x <= 1/2, got {x}")
        iv = _positive("asin", x, N)
    elif kind in ("sin", "cos"):
        iv = _alternating(kind, x, N)
    elif kind in ("sinh", "cosh"):
        iv = _positive(kind, x, N)
    elif kind == "tan":
        iv = elementary_enclosure("sin", x, N, None) / elementary_enclosure("cos", x, N, None)
    else:
        raise ValueError(f"unknown function {kind!r}")
    return iv.round_out(bits) if bits else iv


def asin_difference_enclosure(a: Fraction, b: Fraction, N: int) -> Interval:
    """asin(a) - asin(b) for 0 <= b < a <= 1/2, summed termwise so every term is positive."""
    if not 0 <= b < a <= ASIN_MAX_ARG:
        raise ValueError("asin difference needs 0 <= b < a <= 1/2")
    s = Fraction(0)
    for k in range(N + 1):
        c = _asin_coeff(k)
        s += c * (a ** (2 * k + 1) - b ** (2 * k + 1))
    # termwise differences are bounded by the terms of asin(a)
    return Interval(s, s + remainder_bound("asin", N, a))
