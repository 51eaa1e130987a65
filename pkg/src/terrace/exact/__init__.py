"""Exact rational substrate: intervals, polynomials, Sturm certificates."""

from .interval import (
    IndeterminateQuotient,
    Interval,
    Rat,
    as_rat,
    interval_add,
    interval_div,
    interval_mul,
    interval_neg,
)
from .poly import (
    PolyQ,
    RatFuncQ,
    odd_multiplicity_part,
    poly_eval,
    poly_eval_interval,
    poly_gcd,
    squarefree_part,
    substitute,
)
from .sturm import (
    INF,
    Certificate,
    isolate_roots,
    poly_nonneg_on_ray,
    poly_positive_on_ray,
    sturm_chain,
    sturm_roots,
)
