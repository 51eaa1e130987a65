"""Hyponormality verdicts: pointwise criterion, tail certificates, normaloid refutation."""

from .criterion import (
    FAILS,
    HOLDS,
    UNDECIDED,
    CriterionVerdict,
    HypothesisChecks,
    PrefixResult,
    check_a0,
    check_criterion_at,
    check_prefix,
    corollary_holds,
    theorem_string_holds,
)
from .refute import RefutationRecord, power_sum_from, refute_by_normaloid, zeta_tail_enclosure
from .report import CERTIFIED, REFUTED, CertReport, certify
from .tails import MajorantLemma, TailCertificate, TailSchemaError, tail_certificate, validate_bound
