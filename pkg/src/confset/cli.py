"""Command-line interface.

Subcommands build an AnalysisReport and print it as JSON (default) or
fixed-width text.  Exit status: 0 when all checks agree (findings
included), 2 when independent checks disagree, 1 for usage or input
errors.  CONFSET_MAX_ORDER in the environment overrides --max-order.
"""

from __future__ import annotations

import argparse
import os
import sys

from ._version import __version__
from .errors import GroupSpecError, OrderCapExceeded
from .groups import DEFAULT_ORDER_CAP
from .report import run_analyze, run_cayley, run_punctured, run_verify_all, run_zp


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this tool reserves 2 for oracle
    disagreements, so usage errors exit 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_output_flags(sp, *, out_help="also write the report to this file",
                      out_required=False) -> None:
    sp.add_argument("--format", choices=("json", "text"), default="json",
                    help="report rendering (default json)")
    sp.add_argument("--out", default=None, required=out_required, help=out_help)
    sp.add_argument("--figures", default=None, metavar="DIR",
                    help="render summary figures into DIR")
    sp.add_argument("--timings", action="store_true",
                    help="include wall times in the report (non-deterministic)")
    sp.add_argument("--seed", type=int, default=0,
                    help="seed for all sampled checks (default 0)")
    sp.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP,
                    help="refuse ambient groups larger than this")


def build_parser() -> _Parser:
    parser = _Parser(prog="confset",
                     description="distinct-entry tuple sets over finite groups: "
                                 "counting, generation, Cayley graphs, prime-field "
                                 "spans, and rebasing quotients")
    parser.add_argument("--version", action="version", version=f"confset {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", help="full analysis of one (group, k)")
    sp.add_argument("--group", required=True, help="group expression, e.g. Z4, D3, S3, Z2xZ3")
    sp.add_argument("--k", type=int, required=True, help="tuple arity")
    sp.add_argument("--dump-closure", default=None, metavar="PATH",
                    help="write the closure's member codes, one per line")
    _add_output_flags(sp)

    sp = sub.add_parser("zp", help="prime-field span checks for Z_p")
    sp.add_argument("--p", type=int, required=True, help="odd prime in [3, 7]")
    _add_output_flags(sp)

    sp = sub.add_parser("cayley", help="export the Cayley graph over the tuple set")
    sp.add_argument("--group", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--dot-cap", type=int, default=5000,
                    help="emit DOT only up to this many vertices (default 5000)")
    _add_output_flags(sp, out_help="destination for the DOT file or JSON summary",
                      out_required=True)

    sp = sub.add_parser("punctured", help="rebasing quotient checks")
    sp.add_argument("--group", required=True)
    sp.add_argument("--k", type=int, required=True)
    _add_output_flags(sp)

    sp = sub.add_parser("verify-all", help="run the full verification matrix")
    _add_output_flags(sp)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    env_cap = os.environ.get("CONFSET_MAX_ORDER")
    if env_cap is not None:
        try:
            args.max_order = int(env_cap)
        except ValueError:
            print(f"confset: error: CONFSET_MAX_ORDER must be an integer, "
                  f"got {env_cap!r}", file=sys.stderr)
            return 1

    try:
        if args.command == "analyze":
            report = run_analyze(args.group, args.k, seed=args.seed,
                                 max_order=args.max_order,
                                 dump_closure=args.dump_closure)
        elif args.command == "zp":
            report = run_zp(args.p, seed=args.seed)
        elif args.command == "cayley":
            report = run_cayley(args.group, args.k, args.out,
                                seed=args.seed, max_order=args.max_order,
                                dot_cap=args.dot_cap)
        elif args.command == "punctured":
            report = run_punctured(args.group, args.k, seed=args.seed,
                                   max_order=args.max_order)
        else:
            report = run_verify_all(seed=args.seed, max_order=args.max_order)
    except (GroupSpecError, OrderCapExceeded, ValueError, OSError) as exc:
        print(f"confset: error: {exc}", file=sys.stderr)
        return 1

    rendered = (report.to_json(args.timings) if args.format == "json"
                else report.to_text(args.timings))
    sys.stdout.write(rendered)
    # for cayley, --out is the graph destination already written by the run
    if args.out and args.command != "cayley":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    if args.figures:
        from .figures import render_report_figures

        for path in render_report_figures(report, args.figures):
            print(f"figure: {path}", file=sys.stderr)
    return report.exit_code()


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
