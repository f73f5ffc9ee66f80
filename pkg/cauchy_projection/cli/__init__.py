"""Command line interface module."""

from .main import build_parser, main
from .polytope_file import (
    format_polytope,
    parse_polytope_text,
    read_polytope_file,
    write_polytope_file,
)

__all__ = [
    "build_parser",
    "format_polytope",
    "main",
    "parse_polytope_text",
    "read_polytope_file",
    "write_polytope_file",
]
