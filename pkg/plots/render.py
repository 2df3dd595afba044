#!/usr/bin/env python3
"""Render entpot CSV output into figures.

Usage:
  render.py --figure 1a|1b|1c|2|3|4 [--scan PATH] [--curves PATH...]
            [--points PATH] --out PATH [--no-annotations]
"""
import argparse
import sys

sys.path.insert(0, str(__import__("pathlib").Path(__file__).parent / "src"))

from entpot_plots import FigureSpec, SchemaMismatch, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--figure", required=True, choices=("1a", "1b", "1c", "2", "3", "4"))
    parser.add_argument("--scan", default=None)
    parser.add_argument("--curves", nargs="*", default=[])
    parser.add_argument("--points", default=None)
    parser.add_argument("--out", required=True)
    parser.add_argument("--no-annotations", action="store_true")
    args = parser.parse_args(argv)
    spec = FigureSpec(
        figure=args.figure,
        scan=args.scan,
        curves=list(args.curves),
        points=args.points,
        out=args.out,
        annotate=not args.no_annotations,
    )
    try:
        render(spec)
    except SchemaMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
