"""Sturm-sequence root counting and sign certificates on rays [a, oo)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .interval import Number, as_rat
from .poly import PolyQ, odd_multiplicity_part, poly_eval, squarefree_part

INF = math.inf
Endpoint = Union[Number, float]


def sturm_chain(p: PolyQ) -> list[PolyQ]:
    """Standard chain p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i); p must be square-free."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        # positive rescaling keeps the sign pattern and tames coefficient growth
        chain.append((-r).content_primitive())
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for u, v in zip(nz, nz[1:]) if u != v)


def _signs_at(chain: list[PolyQ], x: Endpoint) -> list[int]:
    if x == INF:
        return [_sign(q.lc) for q in chain]
    if x == -INF:
        return [_sign(q.lc) * (-1 if q.degree % 2 else 1) for q in chain]
    x = as_rat(x)
    return [_sign(poly_eval(q, x)) for q in chain]


def _count(chain: list[PolyQ], a: Endpoint, b: Endpoint) -> int:
    return _variations(_signs_at(chain, a)) - _variations(_signs_at(chain, b))


def sturm_roots(p: PolyQ, a: Endpoint, b: Endpoint = INF) -> int:
    """Number of distinct real roots of p in (a, b]; a may be -inf, b may be +inf."""
    if p.is_zero():
        raise ValueError("sturm_roots of the zero polynomial")
    if p.degree <= 0:
        return 0
    if b != INF and a != -INF and as_rat(a) >= as_rat(b):
        return 0
    return _count(sturm_chain(squarefree_part(p)), a, b)


def root_bound(p: PolyQ) -> Fraction:
    """Cauchy bound: every real root has |x| < 1 + max |c_i / lc|."""
    lc = abs(p.lc)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def isolate_roots(p: PolyQ, a: Number, b: Number) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (l, r], each holding exactly one distinct root of p in (a, b]."""
    chain = sturm_chain(squarefree_part(p))
    out = []
    stack = [(as_rat(a), as_rat(b), _count(chain, a, b))]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = _count(chain, lo, mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, k - left))
    return sorted(out)


@dataclass(frozen=True)
class Certificate:
    """Outcome of a sign decision on a ray.

    ``nonneg`` (or ``positive`` for the strict variant) is a proof; otherwise
    ``witness`` is an exact rational x0 >= a where the claim fails.
    """

    holds: bool
    start: Fraction
    strict: bool = False
    roots_on_ray: int = 0
    witness: Optional[Fraction] = None
    witness_value: Optional[Fraction] = None

    @property
    def kind(self) -> str:
        if self.holds:
            return "positive" if self.strict else "nonneg"
        return "witness_violation"


def _find_witness(p: PolyQ, a: Fraction, bad) -> Optional[Fraction]:
    if bad(poly_eval(p, a)):
        return a
    bound = max(root_bound(p), abs(a) + 1)
    far = bound + 1 if bound + 1 > a else a + 1
    if bad(poly_eval(p, far)):
        return far
    cells = isolate_roots(p, a, bound)
    chain = sturm_chain(squarefree_part(p))
    for _ in range(200):
        for lo, hi in cells:
            w = hi - lo
            for x in (lo + w / 4, lo + w / 2, lo + 3 * w / 4, hi, hi + w / 4, lo - w / 4):
                if x >= a and bad(poly_eval(p, x)):
                    return x
        refined = []
        for lo, hi in cells:
            mid = (lo + hi) / 2
            refined.append((lo, mid) if _count(chain, lo, mid) else (mid, hi))
        cells = refined
    return None


def poly_nonneg_on_ray(p: PolyQ, a: Number) -> Certificate:
    """Decide p(x) >= 0 for all real x >= a exactly.

    p keeps a sign on the ray unless it has a root of odd multiplicity in
    (a, oo); with none, the sign is that of the leading coefficient. A failing
    claim returns a rational witness x0 >= a with p(x0) < 0.
    """
    if p.is_zero():
        raise ValueError("poly_nonneg_on_ray of the zero polynomial")
    a = as_rat(a)
    roots = sturm_roots(p, a, INF)
    if roots == 0 or sturm_roots(odd_multiplicity_part(p), a, INF) == 0:
        if p.lc > 0 and poly_eval(p, a) >= 0:
            return Certificate(True, a, roots_on_ray=roots)
    x0 = _find_witness(p, a, lambda v: v < 0)
    return Certificate(False, a, roots_on_ray=roots, witness=x0,
                       witness_value=None if x0 is None else poly_eval(p, x0))


def poly_positive_on_ray(p: PolyQ, a: Number) -> Certificate:
    """Decide p(x) > 0 for all real x >= a (no roots at all on [a, oo))."""
    if p.is_zero():
        raise ValueError("poly_positive_on_ray of the zero polynomial")
    a = as_rat(a)
    at_a = poly_eval(p, a)
    roots = sturm_roots(p, a, INF)
    if at_a > 0 and roots == 0:
        return Certificate(True, a, strict=True)
    x0 = _find_witness(p, a, lambda v: v <= 0)
    return Certificate(False, a, strict=True, roots_on_ray=roots, witness=x0,
                       witness_value=None if x0 is None else poly_eval(p, x0))
