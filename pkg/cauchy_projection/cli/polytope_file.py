"""Plain-text polytope files.

The first non-comment line is ``d n``; it is followed by ``n`` lines of ``d``
whitespace-separated coordinates. Lines whose first non-blank character is
``#`` are comments, and blank lines are ignored::

    # regular simplex
    3 4
    1 1 1
    1 -1 -1
    -1 1 -1
    -1 -1 1
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from pathlib import Path
from typing import Optional, Union

from ..config import MAX_POLYTOPE_DIMENSION, MIN_DIMENSION
from ..errors import PolytopeFileError
from ..geometry.shapes import Polytope

PathLike = Union[str, Path]


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped.split()


def _parse_int(token: str, what: str, path: Optional[PathLike], number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise PolytopeFileError(
            f"{what} must be an integer, got {token!r}", path, number
        ) from None


def _parse_coordinate(token: str, path: Optional[PathLike], number: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise PolytopeFileError(
            f"invalid coordinate {token!r}", path, number
        ) from None
    if not math.isfinite(value):
        raise PolytopeFileError(f"coordinate {token!r} is not finite", path, number)
    return value


def parse_polytope_text(
    text: str, path: Optional[PathLike] = None, label: str = ""
) -> Polytope:
    """Parse polytope file contents.

    Args:
        text: File contents
        path: Source path, used in error messages
        label: Label for the polytope

    Returns:
        The polytope, with non-extreme points dropped

    Raises:
        PolytopeFileError: If the text is not a well-formed polytope file
        DegenerateGeometryError: If the vertices do not span R^d
    """
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise PolytopeFileError("missing 'd n' header", path)

    number, tokens = header
    if len(tokens) != 2:
        raise PolytopeFileError(
            f"header must be 'd n', got {' '.join(tokens)!r}", path, number
        )
    dim = _parse_int(tokens[0], "dimension", path, number)
    count = _parse_int(tokens[1], "vertex count", path, number)
    if not MIN_DIMENSION <= dim <= MAX_POLYTOPE_DIMENSION:
        raise PolytopeFileError(
            f"dimension must be between {MIN_DIMENSION} and "
            f"{MAX_POLYTOPE_DIMENSION}, got {dim}",
            path,
            number,
        )
    if count < dim + 1:
        raise PolytopeFileError(
            f"a polytope in R^{dim} needs at least {dim + 1} vertices, got {count}",
            path,
            number,
        )

    vertices: list[list[float]] = []
    for number, tokens in lines:
        if len(vertices) == count:
            raise PolytopeFileError(
                f"unexpected data after {count} vertices", path, number
            )
        if len(tokens) != dim:
            raise PolytopeFileError(
                f"expected {dim} coordinates, got {len(tokens)}", path, number
            )
        vertices.append([_parse_coordinate(token, path, number) for token in tokens])

    if len(vertices) < count:
        raise PolytopeFileError(
            f"expected {count} vertices, found {len(vertices)}", path
        )
    return Polytope(vertices, label)


def read_polytope_file(path: PathLike) -> Polytope:
    """Read a polytope file, labelling the polytope with the file name.

    Raises:
        PolytopeFileError: If the file cannot be read or is malformed
        DegenerateGeometryError: If the vertices do not span R^d
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise PolytopeFileError(f"cannot read file: {e}", path) from e
    return parse_polytope_text(text, path, label=path.stem)


def format_polytope(polytope: Polytope) -> str:
    """Return the file representation of a polytope, 17 significant digits."""
    comments = []
    metadata = polytope.metadata
    if metadata["label"]:
        comments.append(f"# {metadata['label']}")
    dropped = metadata["dropped_vertices"]
    if dropped:
        comments.append(f"# {dropped} non-extreme vertices dropped")
    lines = comments + [f"{polytope.dim} {polytope.n_vertices}"]
    lines.extend(
        " ".join(f"{value:.17g}" for value in vertex) for vertex in polytope.vertices
    )
    return "\n".join(lines) + "\n"


def write_polytope_file(path: PathLike, polytope: Polytope) -> None:
    """Write a polytope so that reading it back gives identical vertices."""
    Path(path).write_text(format_polytope(polytope), encoding="utf-8")
