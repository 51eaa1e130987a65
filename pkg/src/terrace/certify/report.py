"""Composition of prefix checks, tail certificates and refutation into one verdict."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from ..seqgen import DEFAULT_ORDER, SeriesOrder
from .criterion import FAILS, PrefixResult, check_prefix
from .refute import RefutationRecord, refute_by_normaloid
from .tails import TailCertificate, TailSchemaError, schema_for, tail_certificate

CERTIFIED, REFUTED, UNDECIDED = "certified_hyponormal", "refuted", "undecided"
DEFAULT_PREFIX = 10


@dataclass
class CertReport:
    family: str
    verdict: str
    prefix: PrefixResult
    tail_upper: Optional[TailCertificate] = None
    tail_lower: Optional[TailCertificate] = None
    refutation: Optional[RefutationRecord] = None
    diagnostics: list[str] = field(default_factory=list)
    elapsed_seconds: float = 0.0
    order_budget: int = DEFAULT_ORDER.budget

    @property
    def hypothesis(self):
        return self.prefix.hypothesis

    @property
    def tails(self) -> tuple[Optional[TailCertificate], Optional[TailCertificate]]:
        return self.tail_upper, self.tail_lower


def certify(s, prefix_max: int = DEFAULT_PREFIX, order: SeriesOrder = DEFAULT_ORDER) -> CertReport:
    """Certified hyponormal iff hypotheses, prefix through n0 and both tails succeed;
    refuted iff the normaloid bound exceeds 1; undecided otherwise."""
    t0 = time.perf_counter()
    diagnostics = []
    try:
        upper_schema, lower_schema = schema_for(s)
        n0 = max(upper_schema.n0, lower_schema.n0)
    except TailSchemaError as exc:
        upper_schema = lower_schema = None
        n0 = 0
        diagnostics.append(str(exc))

    prefix = check_prefix(s, max(prefix_max, n0), order)
    report = CertReport(str(s), UNDECIDED, prefix, order_budget=order.budget)

    hyp = prefix.hypothesis
    if hyp.a0_in_unit != "holds":
        diagnostics.append(f"hypothesis 0 < a_0 <= 1 {hyp.a0_in_unit}: a_0 in {hyp.a0}")
    if hyp.strict_decrease != "holds" and hyp.a0_in_unit != FAILS:
        diagnostics.append(f"strict decrease {hyp.strict_decrease} at n = {hyp.first_nonpositive_diff}")
    if prefix.first_failure is not None:
        v = prefix.verdicts[prefix.first_failure]
        diagnostics.append(f"criterion fails at n = {v.n} (lower {v.lower_check}, upper {v.upper_check})")
    elif prefix.first_undecided is not None:
        diagnostics.append(f"criterion undecided at n = {prefix.first_undecided} within order budget")

    if upper_schema is not None and hyp.ok:
        report.tail_upper = tail_certificate(s, "upper")
        report.tail_lower = tail_certificate(s, "lower")
        through_n0 = all(v.holds for v in prefix.verdicts[: n0 + 1]) and len(prefix.verdicts) > n0
        tails_ok = report.tail_upper.valid and report.tail_lower.valid
        for t in report.tails:
            diagnostics += [f"tail ({t.inequality_id}): {msg}" for msg in t.failures]
        if through_n0 and tails_ok:
            report.verdict = CERTIFIED

    if report.verdict != CERTIFIED:
        report.refutation = refute_by_normaloid(s, order)
        if report.refutation.succeeded:
            report.verdict = REFUTED
        else:
            diagnostics.append(f"normaloid refutation inconclusive: {report.refutation.reason}")

    report.diagnostics = diagnostics
    report.elapsed_seconds = time.perf_counter() - t0
    return report
