"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SudokuChromaError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(SudokuChromaError, ValueError):
    pass


class InvalidEdge(InvalidParameter):
    pass


class InvalidClique(InvalidParameter):
    pass


class ParseError(SudokuChromaError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LimitExceeded(SudokuChromaError):
    pass


class InvalidColor(SudokuChromaError, ValueError):
    pass


class ImproperInput(SudokuChromaError, ValueError):
    """A partial coloring gives two adjacent vertices the same color."""


class NotExtendable(SudokuChromaError):
    pass


class NotUnique(SudokuChromaError):
    pass


class ChromaticViolation(SudokuChromaError, ValueError):
    """The color budget k is below the chromatic number."""


class NotApplicable(SudokuChromaError):
    """A theorem's hypotheses do not hold for the given instance."""
