"""Command line interface for cauchy-projection."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Optional

from .. import __version__
from ..config import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    MAX_TABLE_DIMENSION,
)
from ..errors import CauchyProjectionError
from ..grain.temperature import ONE_AU, SUN_RADIUS, SUN_TEMPERATURE
from ..montecarlo.estimator import FRAMES
from .commands import (
    EXIT_USAGE,
    cmd_grain,
    cmd_plotdata,
    cmd_series,
    cmd_table,
    cmd_verify,
    parse_shape_spec,
)
from .output import FORMATS

MIN_DIGITS = 3
MAX_DIGITS = 15

EPILOG = """
Examples:
  cauchy-projection table --dmin 2 --dmax 33 --digits 3 --check
  cauchy-projection series --d 5 --terms 5 --compare
  cauchy-projection verify --shape cube --d 3 --n 100000 --seed 42
  cauchy-projection verify --shape file:simplex3.txt --n 200000 --seed 7
  cauchy-projection grain --albedo 0.3
  cauchy-projection plotdata --dmax 33 > k.csv

The printed table gives d = 5 to four decimals (0.1875), so --digits 3 shows
0.188 there; --check compares d = 5 at four decimals and every other row at
three.

Exit codes:
  0  success, or verification passed
  1  verification failed (or --check found a mismatch)
  2  invalid arguments or input file
"""


def _digits(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if not MIN_DIGITS <= value <= MAX_DIGITS:
        raise argparse.ArgumentTypeError(
            f"digits must be between {MIN_DIGITS} and {MAX_DIGITS}, got {value}"
        )
    return value


def _add_output_options(
    parser: argparse.ArgumentParser, default_format: str, default_digits: int
) -> None:
    parser.add_argument(
        "--format",
        "-f",
        choices=FORMATS,
        default=default_format,
        help=f"Output format (default: {default_format})",
    )
    parser.add_argument(
        "--digits",
        type=_digits,
        default=default_digits,
        help=(
            f"Decimals printed in csv/text output, {MIN_DIGITS}-{MAX_DIGITS} "
            f"(default: {default_digits})"
        ),
    )


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser for every subcommand."""
    parser = argparse.ArgumentParser(
        prog="cauchy-projection",
        description=(
            "Mean projected area of convex bodies: k(d) tables, series, "
            "Monte Carlo verification and dust-grain temperatures"
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    parser.add_argument(
        "--debug",
        "-d",
        action="store_true",
        help="Enable debug logging on stderr",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    table_parser = subparsers.add_parser("table", help="Tabulate k(d)")
    table_parser.add_argument("--dmin", type=int, default=2, help="(default: 2)")
    table_parser.add_argument("--dmax", type=int, default=33, help="(default: 33)")
    table_parser.add_argument(
        "--exact", action="store_true", help="Add the exact value of k(d)"
    )
    table_parser.add_argument(
        "--check",
        action="store_true",
        help=(
            "Compare against the bundled printed table (d = 5 at four "
            "decimals, 0.1875); exit 1 on mismatch"
        ),
    )
    _add_output_options(table_parser, "csv", 6)
    table_parser.set_defaults(handler=cmd_table)

    series_parser = subparsers.add_parser(
        "series", help="Evaluate the large-d series of k(d)"
    )
    series_parser.add_argument("--d", type=int, required=True, help="Dimension")
    series_parser.add_argument(
        "--terms", type=int, default=5, help="Series terms, 1-5 (default: 5)"
    )
    series_parser.add_argument(
        "--compare",
        action="store_true",
        help="Also print the closed form and the relative error",
    )
    _add_output_options(series_parser, "text", 12)
    series_parser.set_defaults(handler=cmd_series)

    verify_parser = subparsers.add_parser(
        "verify", help="Monte Carlo check of mean shadow = k(d) x surface area"
    )
    verify_parser.add_argument(
        "--shape",
        type=parse_shape_spec,
        required=True,
        help="ball, cube or file:<path> (polytope file, d <= 4)",
    )
    verify_parser.add_argument(
        "--d", type=int, help="Dimension (required for ball and cube)"
    )
    verify_parser.add_argument(
        "--n",
        type=int,
        default=DEFAULT_SAMPLES,
        help=f"Number of random directions (default: {DEFAULT_SAMPLES})",
    )
    verify_parser.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=f"64-bit unsigned seed (default: {DEFAULT_SEED})",
    )
    verify_parser.add_argument(
        "--workers",
        type=int,
        default=DEFAULT_WORKERS,
        help=f"Threads; results do not depend on it (default: {DEFAULT_WORKERS})",
    )
    verify_parser.add_argument(
        "--frame",
        choices=FRAMES,
        default="observer",
        help="Randomize the line of sight or the body (default: observer)",
    )
    _add_output_options(verify_parser, "text", 6)
    verify_parser.set_defaults(handler=cmd_verify)

    grain_parser = subparsers.add_parser(
        "grain", help="Equilibrium temperature of a convex dust grain"
    )
    grain_parser.add_argument(
        "--tstar",
        type=float,
        default=SUN_TEMPERATURE,
        help=f"Stellar temperature in K (default: {SUN_TEMPERATURE})",
    )
    grain_parser.add_argument(
        "--rstar",
        type=float,
        default=SUN_RADIUS,
        help=f"Stellar radius in m (default: {SUN_RADIUS})",
    )
    grain_parser.add_argument(
        "--dist",
        type=float,
        default=ONE_AU,
        help=f"Grain-star distance in m (default: {ONE_AU})",
    )
    grain_parser.add_argument(
        "--albedo", type=float, default=0.0, help="Albedo in [0, 1] (default: 0)"
    )
    ratio_group = grain_parser.add_mutually_exclusive_group()
    ratio_group.add_argument(
        "--ratio",
        type=float,
        default=0.25,
        help="Mean shadow / surface area (default: 0.25, any convex 3-d grain)",
    )
    ratio_group.add_argument(
        "--dim", type=int, help="Use k(DIM), a grain in DIM dimensions"
    )
    grain_parser.add_argument(
        "--format",
        "-f",
        choices=FORMATS,
        default="text",
        help="Output format (default: text)",
    )
    grain_parser.set_defaults(handler=cmd_grain)

    plot_parser = subparsers.add_parser(
        "plotdata", help="k(d), its series and the 1/sqrt(d) envelope for plotting"
    )
    plot_parser.add_argument(
        "--dmax",
        type=int,
        default=33,
        help=f"Largest dimension, at most {MAX_TABLE_DIMENSION} (default: 33)",
    )
    _add_output_options(plot_parser, "csv", 10)
    plot_parser.set_defaults(handler=cmd_plotdata)

    return parser


def configure_logging(debug: bool) -> None:
    """Send package log records to stderr, at DEBUG level when requested."""
    level = logging.DEBUG if debug else logging.WARNING
    logging.basicConfig(
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger("cauchy_projection").setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point.

    Args:
        argv: Arguments without the program name; defaults to ``sys.argv[1:]``

    Returns:
        Process exit code: 0 success, 1 verification failure, 2 usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    configure_logging(args.debug)
    handler: Callable[..., int] = args.handler
    try:
        return handler(args, sys.stdout, sys.stderr)
    except (CauchyProjectionError, OSError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
