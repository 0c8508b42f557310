"""Command-line figure rendering: one subcommand per figure kind."""

from __future__ import annotations

import argparse
import sys

from . import figures
from .formats import FormatError


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="hydroplots",
        description="Render figures from traveling-wave solver data files.",
    )
    sub = parser.add_subparsers(dest="kind", required=True)

    p = sub.add_parser("branches", help="speed-amplitude curves with overlays")
    p.add_argument("inputs", nargs="+", help="branch JSON or h,c CSV files")
    p.add_argument("--no-overlay", action="store_true", help="skip asymptote lines")

    p = sub.add_parser("profiles", help="reconstructed interface shapes")
    p.add_argument("inputs", nargs="+", help="branch or state JSON files")
    p.add_argument("--samples", type=int, default=512, help="curve sample count")

    p = sub.add_parser("surface", help="branch family over sheet mass")
    p.add_argument("inputs", nargs=1, help="surface index JSON")

    p = sub.add_parser("convergence", help="two-resolution spectrum overlay")
    p.add_argument("inputs", nargs=1, help="convergence JSON")

    for name in sub.choices.values():
        name.add_argument("-o", "--out", required=True, help="output image path")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1

    try:
        if args.kind == "branches":
            figures.render_branches(args.inputs, args.out, overlay=not args.no_overlay)
        elif args.kind == "profiles":
            figures.render_profiles(args.inputs, args.out, samples=args.samples)
        elif args.kind == "surface":
            figures.render_surface(args.inputs[0], args.out)
        else:
            figures.render_convergence(args.inputs[0], args.out)
    except (FormatError, figures.PlotError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
