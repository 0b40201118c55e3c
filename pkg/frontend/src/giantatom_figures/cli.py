"""`plot` command: render figures from simulator output files."""

from __future__ import annotations

import argparse
import sys

from . import figures, reader


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot", description="Render figures from simulation CSV outputs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fig1c = sub.add_parser("fig1c", help="two-panel inversion figure")
    fig1c.add_argument("--case-out", required=True, help="out-of-phase trajectory CSV")
    fig1c.add_argument("--case-in", required=True, help="in-phase trajectory CSV")
    fig1c.add_argument("--summary", required=True, help="out-of-phase summary file")
    fig1c.add_argument("--output", required=True, help="output image path")

    geomap = sub.add_parser("geomap", help="geometry heat map")
    geomap.add_argument("--input", required=True, help="geometry-map CSV")
    geomap.add_argument("--output", required=True, help="output image path")

    args = parser.parse_args(argv)
    try:
        if args.command == "fig1c":
            figures.render_fig1c(figures.PlotJob(
                inputs=(args.case_out, args.case_in),
                output=args.output, summary=args.summary,
            ))
        else:
            figures.render_geometry_map(figures.PlotJob(
                inputs=(args.input,), output=args.output,
            ))
    except (reader.ReaderError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
