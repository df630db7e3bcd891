"""``welllines`` command-line interface.

Exit codes: 0 success, 2 bad arguments, 3 numeric failure, 4 I/O failure.
The WELLLINES_TOL environment variable overrides the default solver
tolerance.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import export
from .errors import ConsistencyError, ConvergenceError, MapOverflowError, SingularInputError
from .fsw_solver import SolveOptions, WellParams, strength_from_params
from .sheets3d import DEFAULT_R_MAX
from .wmap import AxialRay

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

_TRUE = {"1", "true", "yes", "on", "t", "y"}
_FALSE = {"0", "false", "no", "off", "f", "n"}


class UsageError(Exception):
    """Invalid option values detected after parsing."""


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in _TRUE:
        return True
    if t in _FALSE:
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(x) and x > 0):
        raise argparse.ArgumentTypeError(f"must be positive and finite: {text!r}")
    return x


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    common.add_argument("--out", help="output file (default: standard output)")

    well = argparse.ArgumentParser(add_help=False)
    well.add_argument("--L", type=_positive_float, help="half width of the well")
    well.add_argument("--V0", type=_positive_float, help="depth of the well")
    well.add_argument("--mass", type=_positive_float, default=None)
    well.add_argument("--hbar", type=_positive_float, default=None)

    p = argparse.ArgumentParser(
        prog="welllines",
        description="Finite square well bound states via Lambert W lines.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lines", parents=[common], help="sample Lambert lines")
    s.add_argument("--branch", type=int, action="append", help="branch index (repeatable; default -2..2)")
    s.add_argument("--ray", choices=[r.value for r in AxialRay], action="append", help="axial ray (repeatable)")
    s.add_argument("--tmin", type=_positive_float, default=1e-8)
    s.add_argument("--tmax", type=_positive_float, default=1e3)
    s.add_argument("--samples", type=_positive_int, default=512)
    s.add_argument("--spacing", choices=("log", "linear"), default="log")

    s = sub.add_parser("solve", parents=[common, well], help="bound states for one strength")
    s.add_argument("--R", type=_positive_float)
    s.add_argument("--include-negative-u", type=_bool, default=True, metavar="BOOL")
    s.add_argument("--include-lower-half-plane", type=_bool, default=False, metavar="BOOL")

    s = sub.add_parser("critical", parents=[common], help="critical strengths")
    s.add_argument("--count", type=_positive_int, default=4)

    s = sub.add_parser("spiral", parents=[common], help="image of the line u = -1")
    s.add_argument("--count", type=_positive_int, default=export.FIG10_COUNT)
    s.add_argument("--samples", type=_positive_int, default=2001)

    s = sub.add_parser("sheets", parents=[common], help="sheet and cone intersection curves")
    s.add_argument("--rmax", type=_positive_float, default=DEFAULT_R_MAX)
    s.add_argument("--samples", type=_positive_int, default=401)
    s.add_argument("--view", choices=("a", "b", "c", "d"), default="d", help="SVG projection")

    s = sub.add_parser("figure", parents=[common], help="data behind one figure")
    s.add_argument("fig_id", help="1..11, or 7a-7d, 9a-9d, 11a-11d")

    sub.add_parser("table1", parents=[common], help="Lambert line property table")
    return p


def _well_params(args):
    given = [args.L, args.V0, args.mass, args.hbar]
    if all(x is None for x in given):
        return None
    if args.L is None or args.V0 is None:
        raise UsageError("--L and --V0 are both required for well parameters")
    return WellParams(args.L, args.V0, args.mass or 1.0, args.hbar or 1.0)


def _table(args) -> export.Table:
    cmd = args.command
    if cmd == "lines":
        if args.tmin >= args.tmax:
            raise UsageError("--tmin must be below --tmax")
        if args.samples < 2:
            raise UsageError("--samples must be >= 2")
        branches = tuple(args.branch) if args.branch else export.FIGURE_BRANCHES
        rays = tuple(AxialRay(r) for r in args.ray) if args.ray else tuple(AxialRay)
        return export.lines_table(branches, rays, args.tmin, args.tmax, args.samples, args.spacing)
    if cmd == "solve":
        params = _well_params(args)
        R = args.R
        if params is not None:
            R_p = strength_from_params(params)
            if R is not None and abs(R - R_p) > 1e-9 * max(R, R_p):
                raise UsageError(f"--R {R} disagrees with the well parameters (R = {R_p!r})")
            R = R_p
        if R is None:
            raise UsageError("solve needs --R or --L and --V0")
        opts = SolveOptions(
            include_negative_u=args.include_negative_u,
            include_lower_half_plane=args.include_lower_half_plane,
        )
        return export.solve_table(R, opts, params)
    if cmd == "critical":
        return export.critical_table(args.count)
    if cmd == "spiral":
        if args.samples < 2:
            raise UsageError("--samples must be >= 2")
        return export.spiral_table(args.count, args.samples)
    if cmd == "sheets":
        if args.samples < 3:
            raise UsageError("--samples must be >= 3")
        return export.sheets_table(args.rmax, args.samples, args.view)
    raise UsageError(f"unknown command {cmd!r}")


def render(args) -> str:
    """Text output of one parsed job."""
    fmt = args.format
    if args.command == "table1":
        if fmt == "json":
            return export.table1_json()
        if fmt == "csv":
            return export.table1_csv()
        raise UsageError("table1 has no SVG form")
    if args.command == "figure":
        try:
            fig = export.figure(args.fig_id)
        except KeyError:
            raise UsageError(f"unknown figure id {args.fig_id!r}; expected one of {', '.join(export.FIGURE_IDS)}") from None
        if fmt == "csv":
            return export.to_csv(fig.table)
        if fmt == "json":
            return export.to_json(fig.table, {"figure": fig.fig_id, "title": fig.title, **fig.extra})
        return fig.draw()
    table = _table(args)
    if fmt == "csv":
        return export.to_csv(table)
    if fmt == "json":
        return export.to_json(table, {"command": args.command})
    return export.render_svg(table)


def _write(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return int(exc.code or 0)
    try:
        text = render(args)
    except (UsageError, ConsistencyError) as exc:
        print(f"welllines: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, MapOverflowError, SingularInputError, ArithmeticError) as exc:
        print(f"welllines: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"welllines: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _write(text, args.out)
    except OSError as exc:
        print(f"welllines: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
