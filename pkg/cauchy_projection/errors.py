"""Exception hierarchy shared by every cauchy-projection module."""

from pathlib import Path
from typing import Optional, Union


class CauchyProjectionError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(CauchyProjectionError):
    """An argument lies outside the mathematical domain of an operation."""


class RangeError(DomainError):
    """A dimension range falls outside the supported table range."""


class DegenerateGeometryError(CauchyProjectionError):
    """A point set does not span the dimension it is supposed to span."""


class DimensionMismatchError(CauchyProjectionError):
    """Two geometric objects live in spaces of different dimension."""


class PolytopeFileError(CauchyProjectionError):
    """A polytope file could not be read or parsed."""

    def __init__(
        self,
        message: str,
        path: Optional[Union[str, Path]] = None,
        line_number: Optional[int] = None,
    ) -> None:
        """Initialize the error.

        Args:
            message: What is wrong with the file
            path: File the problem was found in
            line_number: 1-based line number of the offending line, if any
        """
        self.path = str(path) if path is not None else None
        self.line_number = line_number
        self.reason = message

        location = self.path or "<polytope>"
        if line_number is not None:
            location = f"{location}:{line_number}"
        super().__init__(f"{location}: {message}")
