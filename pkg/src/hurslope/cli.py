"""Command-line harness: census tables and verification sweeps.

Exit status: 0 all checks pass, 1 a verification counterexample, 2 I/O
failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import covercount, picard
from .arithfn import sigma
from .report import Report
from .verify import default_workers, verify_identities, verify_oracle

EXIT_OK, EXIT_FAIL, EXIT_IO, EXIT_USAGE = 0, 1, 2, 64

COMMANDS = ("counts", "verify-slope", "verify-identities", "verify-oracle", "picard")
FORMATS = ("csv", "json", "text")
COUNT_COLUMNS = ("d", "sigma1", "sigma3", "F", "M", "A", "B", "C", "delta0", "delta1", "slope_num", "slope_den")
DEFAULT_MAX_D = {"counts": 20, "verify-slope": 2000, "verify-identities": 2000, "verify-oracle": 500, "picard": 100}
DEFAULT_ORACLE_MAX_D = 200


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    max_d: int
    oracle_max_d: int
    format: str = "text"
    out: str | None = None
    workers: int = 1

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.workers < 1:
            raise UsageError("--workers must be positive")
        low = 3 if self.command == "picard" else 2
        if self.max_d < low:
            raise UsageError(f"--max-d must be >= {low} for {self.command}")
        if not 2 <= self.oracle_max_d <= self.max_d:
            raise UsageError("--oracle-max-d must lie in [2, max-d]")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hurslope", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--max-d", type=int, default=None)
        p.add_argument("--oracle-max-d", type=int, default=None)
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--workers", type=int, default=None)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    max_d = DEFAULT_MAX_D[args.command] if args.max_d is None else args.max_d
    oracle = min(DEFAULT_ORACLE_MAX_D, max_d) if args.oracle_max_d is None else args.oracle_max_d
    return RunConfig(
        command=args.command,
        max_d=max_d,
        oracle_max_d=oracle,
        format=args.format,
        out=args.out,
        workers=default_workers() if args.workers is None else args.workers,
    )


# -- rendering ---------------------------------------------------------------


def render_rows(rows: list[dict], fmt: str) -> str:
    """Rows are dicts of exact values; Fractions become {"num", "den"} in JSON."""
    if fmt == "json":
        def encode(v):
            if isinstance(v, Fraction):
                return {"num": str(v.numerator), "den": str(v.denominator)}
            if isinstance(v, dict):
                return {k: encode(x) for k, x in v.items()}
            if isinstance(v, bool) or v is None:
                return v
            return str(v)

        return json.dumps([encode(r) for r in rows], indent=1) + "\n"
    if not rows:
        return ""
    columns = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([str(r[c]) for c in columns])
        return buf.getvalue()
    cells = [[str(r[c]) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def count_rows(max_d: int) -> list[dict]:
    out = []
    for row in covercount.census(max_d):
        d = row.d
        out.append(dict(zip(COUNT_COLUMNS, (
            d, sigma(1, d), sigma(3, d), covercount.f_from_a(d), row.m_count, row.a_count, row.b_count,
            row.c_count, row.delta0, row.delta1, row.slope.numerator, row.slope.denominator,
        ))))
    return out


def report_rows(report: Report) -> list[dict]:
    rows = []
    for c in report.checks:
        ce = c.counterexample or {}
        rows.append({
            "kind": "check",
            "name": c.name,
            "status": "pass" if c.passed else "fail",
            "detail": "; ".join(f"{k}={v}" for k, v in ce.items()),
        })
    return rows


def render_report(report: Report, fmt: str, classes: dict[str, str] | None = None) -> str:
    classes = classes or {}
    if fmt == "text":
        head = "".join(f"{name}: {value}\n" for name, value in classes.items())
        return head + str(report) + "\n"
    rows = [{"kind": "class", "name": k, "status": "", "detail": v} for k, v in classes.items()]
    return render_rows(rows + report_rows(report), fmt)


# -- commands ----------------------------------------------------------------


def cmd_counts(cfg: RunConfig) -> tuple[int, str]:
    return EXIT_OK, render_rows(count_rows(cfg.max_d), cfg.format)


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    extra = None
    if cfg.command == "verify-slope":
        report = covercount.verify_genus2_slope(cfg.max_d)
    elif cfg.command == "verify-identities":
        report = verify_identities(cfg.max_d, cfg.workers)
    elif cfg.command == "verify-oracle":
        report = verify_oracle(cfg.max_d, cfg.oracle_max_d, cfg.workers)
    else:
        report = picard.verify_slope_relation(numeric_range=range(3, cfg.max_d + 1))
        extra = {
            "lambda": str(picard.lambda_class()),
            "delta": str(picard.delta_class()),
            "Bog(E)": str(picard.bog_e()),
            "Bog(F)": str(picard.bog_f()),
            "rank F": str(picard.derive_rank_f()),
        }
    return (EXIT_OK if report.passed else EXIT_FAIL), render_report(report, cfg.format, extra)


def run(cfg: RunConfig) -> tuple[int, str]:
    if cfg.command == "counts":
        return cmd_counts(cfg)
    return cmd_verify(cfg)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
    except UsageError as exc:
        print(f"hurslope: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    status, text = run(cfg)
    try:
        if cfg.out is None:
            sys.stdout.write(text)
        else:
            with open(cfg.out, "w", newline="\n") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"hurslope: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return status


if __name__ == "__main__":
    sys.exit(main())
