"""Univariate polynomials and rational functions with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

from .interval import Interval, Number, as_rat


class PolyQ:
    """Dense polynomial, coefficients in ascending degree, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c: Number) -> "PolyQ":
        return cls([c])

    @classmethod
    def x(cls) -> "PolyQ":
        return cls([0, 1])

    @classmethod
    def linear(cls, a: Number, b: Number) -> "PolyQ":
        """a + b*x"""
        return cls([a, b])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyQ.const(other)
        return isinstance(other, PolyQ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolyQ({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    def _coerce(self, other) -> "PolyQ":
        if isinstance(other, PolyQ):
            return other
        return PolyQ.const(other)

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return PolyQ(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return PolyQ(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if self.is_zero() or o.is_zero():
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = PolyQ.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Number) -> "PolyQ":
        c = as_rat(c)
        return PolyQ(c * a for a in self.coeffs)

    def monic(self) -> "PolyQ":
        if self.is_zero():
            return self
        return self.scale(1 / self.lc)

    def divmod(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lc
            if c == 0:
                continue
            quot[i - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= c * b
        return PolyQ(quot), PolyQ(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def derivative(self) -> "PolyQ":
        return PolyQ(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __call__(self, x):
        return poly_eval(self, x)

    def compose(self, inner: "PolyQ") -> "PolyQ":
        result = PolyQ()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def content_primitive(self) -> "PolyQ":
        """Positive rational multiple with coprime integer coefficients (same sign pattern)."""
        if self.is_zero():
            return self
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return PolyQ(Fraction(v, g) for v in ints)


def poly_eval(p: PolyQ, x):
    """Horner evaluation; works for Fraction, int, float and Interval arguments."""
    if isinstance(x, Interval):
        return poly_eval_interval(p, x)
    acc = Fraction(0) if not isinstance(x, float) else 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + (c if not isinstance(x, float) else float(c))
    return acc


def poly_eval_interval(p: PolyQ, x: Interval) -> Interval:
    """Sound enclosure of p over x via interval Horner."""
    acc = Interval.point(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


def squarefree_part(p: PolyQ) -> PolyQ:
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    return p // g


def odd_multiplicity_part(p: PolyQ) -> PolyQ:
    """Product of the square-free factors of odd multiplicity (Yun), monic.

    Its real roots are exactly the points where p changes sign.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return PolyQ.const(1)
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    out = PolyQ.const(1)
    i = 1
    while b.degree > 0:
        f = poly_gcd(b, d)
        if i % 2 == 1:
            out = out * f
        b = b // f
        c = d // f
        d = c - b.derivative()
        i += 1
    return out.monic()


class RatFuncQ:
    """Reduced quotient of two PolyQ with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyQ, den: PolyQ | None = None, reduce: bool = True):
        if den is None:
            den = PolyQ.const(1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and den.degree > 0 and not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        if num.is_zero():
            den = PolyQ.const(1)
        lc = den.lc
        self.num = num.scale(1 / lc)
        self.den = den.scale(1 / lc)

    @classmethod
    def const(cls, c: Number) -> "RatFuncQ":
        return cls(PolyQ.const(c))

    @classmethod
    def reciprocal_of(cls, p: PolyQ) -> "RatFuncQ":
        return cls(PolyQ.const(1), p)

    def _coerce(self, other) -> "RatFuncQ":
        if isinstance(other, RatFuncQ):
            return other
        if isinstance(other, PolyQ):
            return RatFuncQ(other)
        return RatFuncQ.const(other)

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RatFuncQ(self.num + o.num, self.den)
        return RatFuncQ(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncQ(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFuncQ(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFuncQ(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFuncQ.const(1) / (self ** -k)
        return RatFuncQ(self.num ** k, self.den ** k, reduce=False)

    def __eq__(self, other):
        o = self._coerce(other)
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return poly_eval(self.num, x) / poly_eval(self.den, x)

    def __repr__(self):
        return f"RatFuncQ(({self.num}) / ({self.den}))"


def substitute(p: PolyQ, arg: RatFuncQ) -> RatFuncQ:
    """p(arg) as a reduced rational function, p(N/D) = sum c_i N^i D^(d-i) / D^d."""
    d = max(p.degree, 0)
    num = PolyQ()
    n_pow = PolyQ.const(1)
    d_pows = [PolyQ.const(1)]
    for _ in range(d):
        d_pows.append(d_pows[-1] * arg.den)
    for i, c in enumerate(p.coeffs):
        if c != 0:
            num = num + (n_pow * d_pows[d - i]).scale(c)
        n_pow = n_pow * arg.num
    return RatFuncQ(num, d_pows[d])

