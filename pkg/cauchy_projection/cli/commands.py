"""Subcommand handlers. Each returns the process exit code."""

from __future__ import annotations

import argparse
from pathlib import Path
from typing import Optional, TextIO, Union

from ..config import MIN_DIMENSION
from ..errors import DimensionMismatchError, DomainError
from ..geometry.shapes import Ball, Cube, Shape
from ..grain.temperature import GrainParams, equilibrium_temperature
from ..montecarlo.estimator import verify_ratio
from ..ratio.reference import compare_with_reference
from ..ratio.routes import check_table_range, k_closed, k_product, k_series, table
from .output import Value, write_records
from .polytope_file import read_polytope_file

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

ShapeSpec = tuple[str, Optional[Path]]


def parse_shape_spec(text: str) -> ShapeSpec:
    """Parse ``ball``, ``cube`` or ``file:<path>`` for ``--shape``."""
    if text in ("ball", "cube"):
        return text, None
    kind, sep, path = text.partition(":")
    if kind == "file" and sep and path:
        return "file", Path(path)
    raise argparse.ArgumentTypeError(
        f"invalid shape {text!r}: expected ball, cube or file:<path>"
    )


def build_shape(spec: ShapeSpec, d: Optional[int]) -> Shape:
    """Return the shape named on the command line.

    Raises:
        DomainError: If ``--d`` is missing or invalid for an analytic shape
        DimensionMismatchError: If ``--d`` contradicts a polytope file
        PolytopeFileError: If a polytope file is unreadable or malformed
    """
    kind, path = spec
    if path is not None:
        polytope = read_polytope_file(path)
        if d is not None and d != polytope.dim:
            raise DimensionMismatchError(
                f"--d {d} does not match the dimension {polytope.dim} of {path}"
            )
        return polytope
    if d is None:
        raise DomainError(f"--d is required for --shape {kind}")
    return Ball(d) if kind == "ball" else Cube(d)


def cmd_table(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    """Print k(d) for a range of dimensions."""
    rows = table(args.dmin, args.dmax)
    records: list[dict[str, Union[int, float, str]]] = []
    for d, k in rows:
        record: dict[str, Union[int, float, str]] = {"d": d, "k": k}
        if args.exact:
            record["exact"] = str(k_product(d))
        records.append(record)
    write_records(records, args.format, out, digits=args.digits)

    if not args.check:
        return EXIT_OK
    mismatches = compare_with_reference(rows)
    for m in mismatches:
        err.write(
            f"⚠️  d={m.d}: printed {m.printed}, "
            f"computed {m.rounded} ({m.computed!r})\n"
        )
    return EXIT_FAILED if mismatches else EXIT_OK


def cmd_series(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    """Print the large-d series of k(d), optionally against the closed form."""
    value = k_series(args.d, args.terms)
    record: dict[str, Union[int, float]] = {
        "d": args.d,
        "terms": args.terms,
        "series": value,
    }
    if args.compare:
        exact = k_closed(args.d)
        record["k_closed"] = exact
        record["rel_err"] = abs(value / exact - 1.0)
    write_records(
        [record],
        args.format,
        out,
        digits=args.digits,
        styles={"rel_err": "scientific"},
        single=True,
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    """Run a Monte Carlo check of mean shadow = k(d) × surface area."""
    shape = build_shape(args.shape, args.d)
    result = verify_ratio(
        shape, args.n, args.seed, workers=args.workers, frame=args.frame
    )
    estimate = result.estimate
    kind, path = args.shape
    record: dict[str, Value] = {
        "shape": str(path) if kind == "file" else kind,
        "d": estimate.dim,
        "n": estimate.n_samples,
        "seed": int(estimate.seed),
        "mean": estimate.mean,
        "stderr": estimate.stderr,
        "surface_area": result.surface_area,
        "ratio": result.ratio,
        "predicted": result.predicted,
        "z_score": result.z_score,
        "passed": result.passed,
    }
    write_records([record], args.format, out, digits=args.digits, single=True)

    if result.passed:
        return EXIT_OK
    err.write(
        f"❌ verification failed: mean {estimate.mean!r} vs predicted "
        f"{result.predicted!r} (z = {result.z_score!r})\n"
    )
    return EXIT_FAILED


def cmd_grain(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    """Print the equilibrium temperature of a dust grain."""
    if args.dim is not None:
        params = GrainParams.for_dimension(
            args.dim, args.tstar, args.rstar, args.dist, args.albedo
        )
    else:
        params = GrainParams(args.tstar, args.rstar, args.dist, args.albedo, args.ratio)

    record = {
        "star_temperature": params.star_temperature,
        "star_radius": params.star_radius,
        "distance": params.distance,
        "albedo": params.albedo,
        "ratio": params.ratio,
        "t_grain_k": equilibrium_temperature(params),
    }
    styles = dict.fromkeys(record, "significant")
    write_records([record], args.format, out, digits=6, styles=styles, single=True)
    return EXIT_OK


def cmd_plotdata(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    """Print k(d), its five-term series and the 1/√d leading term."""
    check_table_range(MIN_DIMENSION, args.dmax)
    records = [
        {
            "d": d,
            "k_closed": k_closed(d),
            "k_series5": k_series(d, 5),
            "leading_term": k_series(d, 1),
        }
        for d in range(MIN_DIMENSION, args.dmax + 1)
    ]
    write_records(records, args.format, out, digits=args.digits)
    return EXIT_OK
