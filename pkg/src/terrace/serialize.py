"""Canonical JSON, markdown and CSV renderings of reports.

Exact rationals become ``{"num", "den", "decimal"}`` objects so a reader can
re-check every inequality without trusting the decimal rendering.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import Context, Decimal
from fractions import Fraction
from typing import Any, Optional

from . import __version__
from .certify import CertReport, CriterionVerdict, RefutationRecord, TailCertificate
from .certify.criterion import HypothesisChecks
from .exact import Certificate, Interval, PolyQ
from .seqgen import MonotonicityReport
from .spectra import SpectrumReport

SCHEMA_ID = "terrace.report/1"
_DEC = Context(prec=40)


def rat(x: Fraction) -> dict:
    x = Fraction(x)
    dec = _DEC.divide(Decimal(x.numerator), Decimal(x.denominator))
    return {"num": str(x.numerator), "den": str(x.denominator), "decimal": format(dec, "g")}


def interval(iv: Optional[Interval]) -> Optional[dict]:
    if iv is None:
        return None
    return {"lo": rat(iv.lo), "hi": rat(iv.hi)}


def poly(p: PolyQ) -> list[dict]:
    return [rat(c) for c in p.coeffs]


def certificate(c: Certificate) -> dict:
    return {
        "kind": c.kind,
        "holds": c.holds,
        "start": rat(c.start),
        "roots_on_ray": c.roots_on_ray,
        "witness": None if c.witness is None else rat(c.witness),
    }


def verdict(v: CriterionVerdict) -> dict:
    return {
        "n": v.n,
        "a_n": interval(v.value),
        "lower_check": v.lower_check,
        "upper_check": v.upper_check,
        "lower_margin": interval(v.lower_margin),
        "upper_margin": interval(v.upper_margin),
        "order": v.order,
    }


def hypothesis(h: HypothesisChecks) -> dict:
    return {
        "a0": interval(h.a0),
        "a0_in_unit": h.a0_in_unit,
        "strict_decrease": h.strict_decrease,
        "first_nonpositive_diff": h.first_nonpositive_diff,
        "checked_through": h.checked_through,
    }


def _conditions(conds) -> list[dict]:
    return [{"label": c.label, "holds": c.holds} for c in conds]


def tail(t: Optional[TailCertificate]) -> Optional[dict]:
    if t is None:
        return None
    return {
        "inequality_id": t.inequality_id,
        "which": t.which,
        "relation": t.relation,
        "n0": t.n0,
        "criterion_form": t.criterion_form,
        "factors": t.factors,
        "reduced_numerator": poly(t.reduced_numerator),
        "cleared_denominator": poly(t.cleared_denominator),
        "sturm": certificate(t.sturm_outcome),
        "majorant_lemmas": [
            {
                "function": m.function,
                "argument": m.argument,
                "order": m.order,
                "side": m.side,
                "rule": m.rule,
                "polynomial": poly(m.polynomial),
                "valid": m.valid,
                "conditions": _conditions(m.conditions),
            }
            for m in t.majorant_lemmas
        ],
        "side_conditions": _conditions(t.side_conditions),
        "valid": t.valid,
    }


def refutation(r: Optional[RefutationRecord]) -> Optional[dict]:
    if r is None:
        return None
    return {
        "succeeded": r.succeeded,
        "method": r.method,
        "lambda": rat(r.lambda_),
        "threshold": rat(r.threshold),
        "column_norm_sq_lower": rat(r.column_norm_sq_lower),
        "a0_term": interval(r.a0_term),
        "minorant_coefficient": None if r.minorant_coefficient is None else rat(r.minorant_coefficient),
        "zeta_terms": [{"exponent": s, "enclosure": interval(iv)} for s, iv in r.zeta_terms],
        "lemma_conditions": _conditions(r.lemma_conditions),
        "reason": r.reason,
    }


def cert_report(rep: CertReport, timing: bool = True) -> dict:
    stats = {
        "max_order_used": rep.prefix.max_order,
        "order_budget": rep.order_budget,
        "prefix_max": rep.prefix.n_max,
    }
    if timing:
        stats["elapsed_seconds"] = round(rep.elapsed_seconds, 6)
    return {
        "family": rep.family,
        "verdict": rep.verdict,
        "hypothesis": hypothesis(rep.hypothesis),
        "prefix": [verdict(v) for v in rep.prefix.verdicts],
        "tails": [tail(t) for t in rep.tails if t is not None],
        "refutation": refutation(rep.refutation),
        "diagnostics": list(rep.diagnostics),
        "statistics": stats,
    }


def spectrum(r: SpectrumReport) -> dict:
    return {
        "family": r.family,
        "N": r.N,
        "min_eigenvalue": float(r.min_eigenvalue),
        "residual": float(r.residual),
        "tail_bound_used": float(r.tail_bound_used),
        "tolerance": float(r.tolerance),
        "tag": r.tag,
    }


def monotonicity(m: MonotonicityReport) -> dict:
    return {
        "family": m.family,
        "n_max": m.n_max,
        "classification": m.classification,
        "strictly_decreasing": m.strictly_decreasing,
        "strictly_increasing": m.strictly_increasing,
        "constant": m.constant,
        "first_violation_index": m.first_violation_index,
        "first_increase_violation": m.first_increase_violation,
        "first_decrease_violation": m.first_decrease_violation,
        "undecided_indices": m.undecided_indices,
    }


def envelope(command: str, family: str, body: dict, timestamp: Optional[str]) -> dict:
    doc: dict[str, Any] = {"schema": SCHEMA_ID, "tool_version": __version__, "command": command, "family": family}
    if timestamp is not None:
        doc["generated_at"] = timestamp
    doc.update(body)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _f(iv: Optional[dict]) -> str:
    if iv is None:
        return ""
    lo, hi = Decimal(iv["lo"]["decimal"]), Decimal(iv["hi"]["decimal"])
    return f"[{lo:.12g}, {hi:.12g}]"


def to_markdown(doc: dict) -> str:
    out = [f"# terrace {doc['command']}: `{doc['family']}`", ""]
    if "certificate" in doc:
        c = doc["certificate"]
        h = c["hypothesis"]
        out += [f"**Verdict:** {c['verdict']}", "",
                f"- 0 < a_0 <= 1: {h['a0_in_unit']} (a_0 in {_f(h['a0'])})",
                f"- strict decrease on prefix: {h['strict_decrease']}", ""]
        out += _table_md(c["prefix"])
        for t in c["tails"]:
            out += ["", f"## Tail certificate ({t['inequality_id']}), {t['which']} half, n >= {t['n0']}",
                    f"- form: {t['criterion_form']}",
                    f"- reduced numerator degree {len(t['reduced_numerator']) - 1}, Sturm: {t['sturm']['kind']}",
                    f"- majorant lemmas valid: {all(m['valid'] for m in t['majorant_lemmas'])}",
                    f"- valid: {t['valid']}"]
        if c["refutation"]:
            r = c["refutation"]
            out += ["", "## Normaloid refutation",
                    f"- method: {r['method']}",
                    f"- lower bound on ||(M - I) e_0||^2: {r['column_norm_sq_lower']['decimal'][:14]}",
                    f"- succeeded: {r['succeeded']}"]
        if c["diagnostics"]:
            out += ["", "## Diagnostics"] + [f"- {d}" for d in c["diagnostics"]]
    if "table" in doc:
        if doc.get("warnings"):
            out += [f"- {w}" for w in doc["warnings"]] + [""]
        out += _table_md(doc["table"])
    if "spectra" in doc:
        out += ["| N | min eigenvalue | residual | tag |", "|---|---|---|---|"]
        out += [f"| {r['N']} | {r['min_eigenvalue']:.6e} | {r['residual']:.2e} | {r['tag']} |" for r in doc["spectra"]]
        if doc.get("weighted_monotonicity"):
            w = doc["weighted_monotonicity"]
            out += ["", f"(n+1) a_n for n <= {w['n_max']}: {w['classification']}"
                        f" (first decrease violation: {w['first_decrease_violation']})"]
    return "\n".join(out) + "\n"


def _table_md(rows) -> list[str]:
    out = ["| n | a_n | (a_n - a_n+1)/a_n^2 | (a_n - a_n+1)/(a_n a_n+1) | lower | upper |",
           "|---|---|---|---|---|---|"]
    for r in rows:
        out.append(f"| {r['n']} | {_f(r['a_n'])} | {_f(r['lower_margin'])} | {_f(r['upper_margin'])} "
                   f"| {r['lower_check']} | {r['upper_check']} |")
    return out


def to_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "spectra" in doc:
        w.writerow(["N", "min_eig", "residual", "tag"])
        for r in doc["spectra"]:
            w.writerow([r["N"], repr(r["min_eigenvalue"]), repr(r["residual"]), r["tag"]])
        return buf.getvalue()
    rows = doc["table"] if "table" in doc else doc["certificate"]["prefix"]
    w.writerow(["n", "a_lo", "a_hi", "lower_margin_lo", "lower_margin_hi",
                "upper_margin_lo", "upper_margin_hi", "lower_check", "upper_check"])
    for r in rows:
        w.writerow([r["n"], r["a_n"]["lo"]["decimal"], r["a_n"]["hi"]["decimal"],
                    r["lower_margin"]["lo"]["decimal"], r["lower_margin"]["hi"]["decimal"],
                    r["upper_margin"]["lo"]["decimal"], r["upper_margin"]["hi"]["decimal"],
                    r["lower_check"], r["upper_check"]])
    return buf.getvalue()
