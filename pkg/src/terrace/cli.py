"""terrace <certify|explore|table> --family <spec> [options]

Exit codes for certify: 0 certified hyponormal, 1 refuted, 2 undecided.
Every command exits 3 on usage or internal errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from . import serialize
from .certify import CERTIFIED, REFUTED, certify, check_a0, check_criterion_at
from .seqgen import FamilySpecError, SeriesOrder, parse_family, weighted_monotonicity
from .spectra import EIG_TOL, MAX_DIM, explore_open_question

EXIT_CERTIFIED, EXIT_REFUTED, EXIT_UNDECIDED, EXIT_ERROR = 0, 1, 2, 3
DEFAULT_PREFIX = {"certify": 10, "table": 10, "explore": 100}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    family: str
    prefix_max: int
    order_budget: int = 64
    dimensions: list[int] = field(default_factory=list)
    out: Optional[Path] = None
    format: str = "json"
    timestamp: bool = True
    weighted_check: bool = False
    eig_tol: float = EIG_TOL

    def __post_init__(self):
        if self.prefix_max < 0:
            raise UsageError("--prefix must be nonnegative")
        if self.order_budget < 2:
            raise UsageError("--budget must be at least 2")
        if not 0 < self.eig_tol < 1:
            raise UsageError("--eig-tol must lie in (0, 1)")
        try:
            self.sequence = parse_family(self.family)
        except FamilySpecError as exc:
            raise UsageError(str(exc)) from exc

    @property
    def order(self) -> SeriesOrder:
        return SeriesOrder(2, self.order_budget)


def _stamp(cfg: RunConfig) -> Optional[str]:
    return datetime.now(timezone.utc).isoformat(timespec="seconds") if cfg.timestamp else None


def _emit(cfg: RunConfig, doc: dict) -> None:
    if cfg.format == "json":
        text = serialize.dumps(doc)
    elif cfg.format == "markdown":
        text = serialize.to_markdown(doc)
    else:
        text = serialize.to_csv(doc)
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        cfg.out.write_text(text)


def cmd_certify(cfg: RunConfig) -> int:
    rep = certify(cfg.sequence, cfg.prefix_max, cfg.order)
    body = {"certificate": serialize.cert_report(rep, timing=cfg.timestamp)}
    _emit(cfg, serialize.envelope("certify", cfg.sequence.spec, body, _stamp(cfg)))
    return {CERTIFIED: EXIT_CERTIFIED, REFUTED: EXIT_REFUTED}.get(rep.verdict, EXIT_UNDECIDED)


def cmd_explore(cfg: RunConfig) -> int:
    if not cfg.dimensions:
        raise UsageError("explore needs --dims")
    if any(not 1 <= d <= MAX_DIM for d in cfg.dimensions):
        raise UsageError(f"dimensions must lie in 1..{MAX_DIM}")
    reports = explore_open_question(cfg.sequence, cfg.dimensions, cfg.eig_tol)
    body = {"spectra": [serialize.spectrum(r) for r in reports]}
    if cfg.weighted_check:
        body["weighted_monotonicity"] = serialize.monotonicity(
            weighted_monotonicity(cfg.sequence, max(cfg.prefix_max, 2), cfg.order))
    _emit(cfg, serialize.envelope("explore", cfg.sequence.spec, body, _stamp(cfg)))
    return 0


def cmd_table(cfg: RunConfig) -> int:
    rows = [serialize.verdict(check_criterion_at(cfg.sequence, n, cfg.order)) for n in range(cfg.prefix_max + 1)]
    a0, a0_ok = check_a0(cfg.sequence, cfg.order)
    warnings = []
    if a0_ok != "holds":
        side = "a_0 > 1" if a0.lo > 1 else "a_0 not certified in (0, 1]"
        warnings.append(f"hypothesis warning: {side} (a_0 in [{float(a0.lo):.12g}, {float(a0.hi):.12g}])")
    body = {"table": rows, "warnings": warnings}
    _emit(cfg, serialize.envelope("table", cfg.sequence.spec, body, _stamp(cfg)))
    return 0


COMMANDS = {"certify": cmd_certify, "explore": cmd_explore, "table": cmd_table}


def _dims(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad dimension list {text!r}") from exc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="terrace", description="Hyponormality certificates for terraced matrices.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--family", required=True, help="sequence spec, e.g. ln1p@k=1, tan@k=2")
    p.add_argument("--prefix", type=int, default=None, help="largest index checked pointwise")
    p.add_argument("--budget", type=int, default=64, help="maximum series order in adaptive refinement")
    p.add_argument("--dims", type=_dims, default=[], help="comma-separated compression sizes (explore)")
    p.add_argument("--format", choices=("json", "markdown", "csv"), default="json")
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--no-timestamp", action="store_true", help="omit timestamp and timing for reproducible output")
    p.add_argument("--eig-tol", type=float, default=EIG_TOL, help="relative eigen-residual tolerance (explore)")
    p.add_argument("--weighted-check", action="store_true", help="also classify (n+1) a_n (explore)")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = RunConfig(
            command=args.command,
            family=args.family,
            prefix_max=DEFAULT_PREFIX[args.command] if args.prefix is None else args.prefix,
            order_budget=args.budget,
            dimensions=args.dims,
            out=args.out,
            format=args.format,
            timestamp=not args.no_timestamp,
            weighted_check=args.weighted_check,
            eig_tol=args.eig_tol,
        )
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"terrace: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as exc:  # internal failure still honours the exit-code contract
        print(f"terrace: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
