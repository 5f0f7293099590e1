"""Command-line entry point.

    lnn-route report <dir|file> [--order recursive|labels|exhaustive|identity]
                     [--seed INT] [--weighted-cut BOOL] [--keep-best]
                     [--emit-lnn DIR] [--verify-max-lines INT] [--format csv|md]

Exit codes: 0 success, 1 any parse or verification failure, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .ordering import STRATEGIES
from .report import run_suite, to_csv, to_markdown


def _bool_flag(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "1", "yes", "on"):
        return True
    if lowered in ("false", "0", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lnn-route",
                                     description="LNN synthesis cost reports for reversible circuits")
    sub = parser.add_subparsers(dest="command", required=True)
    report = sub.add_parser("report", help="run the pipeline over .real files and print a cost table")
    report.add_argument("path", help=".real file or a directory of them")
    report.add_argument("--order", choices=STRATEGIES, default="recursive",
                        help="line-ordering strategy (default: recursive)")
    report.add_argument("--seed", type=int, default=0)
    report.add_argument("--weighted-cut", type=_bool_flag, default=True, metavar="BOOL",
                        help="use edge weights in the partitioning objective (default: true)")
    report.add_argument("--keep-best", action="store_true",
                        help="fall back to the identity ordering when reordering is worse")
    report.add_argument("--emit-lnn", metavar="DIR",
                        help="write LNN .real files (before/after ordering) into DIR")
    report.add_argument("--verify-max-lines", type=int, default=12,
                        help="skip equivalence checking above this many lines (default: 12)")
    report.add_argument("--format", choices=("csv", "md"), default="md")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    path = Path(args.path)
    if not path.exists():
        print(f"lnn-route: path not found: {path}", file=sys.stderr)
        return 2

    suite = run_suite(
        path,
        strategy=args.order,
        seed=args.seed,
        weighted=args.weighted_cut,
        keep_best=args.keep_best,
        emit_lnn=args.emit_lnn,
        verify_max_lines=args.verify_max_lines,
    )
    if args.format == "csv":
        sys.stdout.write(to_csv(suite))
    else:
        sys.stdout.write(to_markdown(suite))
    for name, error in suite.failures:
        print(f"lnn-route: {name}: {error}", file=sys.stderr)
    for r in suite.reports:
        if r.verified is False:
            print(f"lnn-route: {r.name}: equivalence check FAILED", file=sys.stderr)
    return 0 if suite.ok else 1


if __name__ == "__main__":
    sys.exit(main())
