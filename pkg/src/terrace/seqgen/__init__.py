"""Generating sequences of terraced matrices and their truncated Maclaurin polynomials."""

from .families import (
    DEFAULT_ORDER,
    FAMILIES,
    CustomFamily,
    FamilySpecError,
    SequenceFamily,
    SeriesOrder,
    diff_enclosure,
    parse_family,
    value_enclosure,
)
from .series import (
    elementary_enclosure,
    maclaurin_poly,
    remainder_bound,
    remainder_lemma,
    series_term,
    truncation_side,
)
from .weighted import MonotonicityReport, weighted_monotonicity, weighted_step
