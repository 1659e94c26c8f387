"""Standalone figure scripts: one subcommand per figure kind.

Examples:
    shellplot dispersion out/dispersion_h0.004.csv out/dispersion_h0.002.csv -o disp.png
    shellplot k_vs_h out/sweep_summary.csv --pred out/prediction.json -o k.png
"""

from __future__ import annotations

import argparse
import sys

from .figures import KINDS, FigureSpec, plot
from .schema import SchemaMismatch


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shellplot", description="redraw shellmodes benchmark figures from CSV output"
    )
    sub = parser.add_subparsers(dest="kind", required=True)
    for kind in KINDS:
        p = sub.add_parser(kind)
        p.add_argument("csv", nargs="+", help="input CSV file(s)")
        p.add_argument("-o", "--output", required=True, help="output image path")
        p.add_argument(
            "--pred",
            help="prediction record JSON (required for every kind but dispersion)",
        )
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        spec = FigureSpec(
            kind=args.kind,
            csv_paths=tuple(args.csv),
            output_path=args.output,
            prediction_path=args.pred,
        )
        result = plot(spec)
    except (ValueError, OSError, SchemaMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(result.path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
