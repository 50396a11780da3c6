"""Command-line entry point.

Examples::

    dfroot --table1                         # regenerate the full comparison table
    dfroot --method L1 --problem f1 --format csv
    dfroot --method all --problem f4 --problem f9 --budget 16 --digits 1000
    dfroot --config run.json --out report.md

Exit status: 0 on success, 1 for a rejected run specification, 2 if any cell
ended Degenerate.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import InvalidSpec, RootFinderError
from .golden import compare_report
from .harness import RunSpec, run_benchmark
from .render import render_report

EXIT_OK, EXIT_SPEC, EXIT_DEGENERATE = 0, 1, 2
_FORMATS = {"md": "md", "markdown": "md", "csv": "csv", "json": "json"}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dfroot",
        description="Run derivative-free root finders on the benchmark equations "
                    "and report final errors and computational orders of convergence.")
    p.add_argument("--method", action="append", dest="methods", metavar="NAME",
                   help="L1..L8, KT, M1, M2, M3, P1, P2, Steffensen, Newton, or 'all' (repeatable)")
    p.add_argument("--problem", action="append", dest="problems", metavar="ID",
                   help="f1..f13 or 'all' (repeatable; default all)")
    p.add_argument("--budget", type=int, help="total function evaluations per run (default 12)")
    p.add_argument("--digits", type=int, help="working precision in decimal digits (default 2048)")
    p.add_argument("--kappa", help="override kappa for family/Steffensen runs")
    p.add_argument("--beta", help="override beta for comparator runs (default 1)")
    p.add_argument("--omega", help="override omega for family runs")
    p.add_argument("--table1", action="store_true",
                   help="reference-table layout: each row's tabulated L method plus the comparators")
    p.add_argument("--format", default="md", help="md, csv or json (default md)")
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    p.add_argument("--config", type=Path, help="JSON run specification; flags override its values")
    p.add_argument("--jobs", type=int, help="worker processes for independent cells")
    p.add_argument("--check-golden", action="store_true",
                   help="print exponent deviations from the tabulated values to stderr")
    return p


def spec_from_args(args) -> RunSpec:
    spec = RunSpec.from_file(args.config) if args.config else RunSpec()
    for name in ("methods", "problems", "budget", "digits", "kappa", "beta", "omega", "jobs"):
        val = getattr(args, name)
        if val is not None:
            setattr(spec, name, val)
    if args.table1:
        spec.layout = "table1"
    return spec.validate()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fmt = _FORMATS.get(args.format)
    try:
        if fmt is None:
            raise InvalidSpec(f"--format must be one of md, csv, json; got {args.format!r}")
        spec = spec_from_args(args)
    except RootFinderError as exc:
        print(f"dfroot: error: {exc}", file=sys.stderr)
        return EXIT_SPEC

    report = run_benchmark(spec)
    text = render_report(report, fmt)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)

    if args.check_golden:
        for chk in compare_report(report):
            print(f"{chk.method:>10} {chk.problem:>4}  reference {chk.reference_error:>12}  "
                  f"exponent deviation {chk.exponent_deviation:.3f}", file=sys.stderr)
    return EXIT_DEGENERATE if report.any_degenerate else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
