"""Command-line entry point for rendering thermomagic CLI outputs.

Subcommands: `curves` (two-panel threshold sweeps), `landscape`
(equirectangular heatmap), `cone` (3-D reachable-set render).  Each writes
<out>.png and <out>.svg deterministically.
"""

from __future__ import annotations

import argparse
import sys

from .cone_render import plot_cone
from .critical_curves import plot_critical_curves
from .landscape_map import plot_landscape


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thermomagic-figures")
    sub = parser.add_subparsers(dest="command", required=True)

    p_curves = sub.add_parser("curves", help="critical-parameter curves")
    p_curves.add_argument("--beta-crt", nargs="+", default=[], metavar="CSV")
    p_curves.add_argument("--c-crt", nargs="+", default=[], metavar="CSV")
    p_curves.add_argument("--labels", nargs="+", default=None)
    p_curves.add_argument("--out", required=True, help="output stem (no extension)")

    p_map = sub.add_parser("landscape", help="distillability heatmap")
    p_map.add_argument("csv")
    p_map.add_argument("--orbit", choices=("T", "H"), default="T")
    p_map.add_argument("--out", required=True)

    p_cone = sub.add_parser("cone", help="reachable-set render")
    p_cone.add_argument("csv")
    p_cone.add_argument("--out", required=True)
    return parser


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "curves":
            plot_critical_curves(args.beta_crt, args.c_crt, args.out, args.labels)
        elif args.command == "landscape":
            plot_landscape(args.csv, args.out, orbit=args.orbit)
        else:
            plot_cone(args.csv, args.out)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
