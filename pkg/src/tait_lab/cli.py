"""Command line interface: tait-lab {invariants,report,simplify,walk}.

Exit codes: 0 success, 1 check failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cache import ENV_VAR, InvariantCache
from .checker import CHECK_NAMES, compute_invariants, run_checks
from .diagram import DiagramError, parse_pd
from .moves import MoveError, greedy_simplify, random_move_walk
from .tables import IngestError, ingest

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _cache_from_args(args) -> InvariantCache | None:
    path = getattr(args, "cache", None) or os.environ.get(ENV_VAR)
    return InvariantCache(path) if path else None


def _cmd_invariants(args) -> int:
    entries, errors = ingest(args.input)
    if args.name:
        entries = [e for e in entries if e.name == args.name]
        if not entries:
            print(f"no entry named {args.name!r}", file=sys.stderr)
            return EXIT_INPUT_ERROR
    cache = _cache_from_args(args)
    for lineno, msg in errors:
        print(f"warning: line {lineno}: {msg}", file=sys.stderr)
    for entry in entries:
        inv = compute_invariants(entry.diagram, engine=args.engine)
        doc = {"name": entry.name}
        doc.update(inv)
        print(json.dumps(doc, sort_keys=False))
    if cache is not None:
        cache.save()
    return EXIT_OK


def _cmd_report(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = set(checks) - set(CHECK_NAMES)
    if bad:
        print(f"unknown checks: {sorted(bad)}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    entries, errors = ingest(args.input)
    cache = _cache_from_args(args)
    report = run_checks(entries, checks=checks, engine=args.engine, cache=cache, ingest_errors=errors)
    report.write(args.output, args.format)
    summary = report.summary()
    for check, counts in summary["checks"].items():
        print(f"{check}: {counts['pass']} pass, {counts['fail']} fail, {counts['n/a']} n/a")
    for name, check, notes in report.failures:
        print(f"FAIL {name} [{check}]: {notes}", file=sys.stderr)
    return report.exit_code


def _cmd_simplify(args) -> int:
    d = parse_pd(args.pd)
    s = greedy_simplify(d)
    print(s.render() if s.n else "(0-crossing unknot)")
    return EXIT_OK


def _cmd_walk(args) -> int:
    d = parse_pd(args.pd)
    out = random_move_walk(d, steps=args.steps, max_crossings=args.max_crossings, seed=args.seed)
    print(out.render() if out.n else "(0-crossing unknot)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tait-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="print invariants of table entries as JSON lines")
    p.add_argument("--input", required=True, help="JSONL knot table")
    p.add_argument("--name", help="restrict to one entry")
    p.add_argument("--engine", choices=("brute", "contract", "auto"), default="auto")
    p.add_argument("--cache", help=f"invariant cache path (or ${ENV_VAR})")
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("report", help="run Tait checks over a table and write a report")
    p.add_argument("--input", required=True)
    p.add_argument("--checks", default=",".join(CHECK_NAMES))
    p.add_argument("--output", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--engine", choices=("brute", "contract", "auto"), default="auto")
    p.add_argument("--cache", help=f"invariant cache path (or ${ENV_VAR})")
    p.set_defaults(fn=_cmd_report)

    p = sub.add_parser("simplify", help="greedily remove R1/R2 crossings from a PD code")
    p.add_argument("--pd", required=True, help='PD text, e.g. "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"')
    p.set_defaults(fn=_cmd_simplify)

    p = sub.add_parser("walk", help="apply random Reidemeister moves (deterministic per seed)")
    p.add_argument("--pd", required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-crossings", type=int, default=16)
    p.set_defaults(fn=_cmd_walk)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (IngestError, DiagramError, MoveError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
