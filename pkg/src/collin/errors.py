"""Exception types raised across the library."""

from __future__ import annotations


class CollinError(ValueError):
    """Base class for all errors raised by this package."""


class DimensionMismatch(CollinError):
    """Input arrays have inconsistent shapes or lengths."""


class InvalidDesign(CollinError):
    """A design violates a structural requirement such as n > k or k >= 2."""


class RankDeficient(CollinError):
    """The design matrix is numerically rank deficient.

    ``columns`` names the columns pivoted beyond the detected rank.
    """

    def __init__(self, columns, message: str | None = None):
        self.columns = tuple(columns)
        super().__init__(message or f"design matrix is rank deficient; suspect columns: {self.columns}")


class DegenerateResponse(CollinError):
    """The response has zero centered sum of squares."""


class ExactCollinearity(CollinError):
    """An auxiliary regression explains a predictor (numerically) perfectly."""

    def __init__(self, column, r2: float):
        self.column = column
        self.r2 = r2
        super().__init__(f"predictor {column!r} is exactly collinear with the others (R^2 = {r2!r})")


class ConstantColumn(CollinError):
    """A predictor has zero sample variance."""

    def __init__(self, column):
        self.column = column
        super().__init__(f"predictor {column!r} has zero sample variance")


class EmptyDesign(CollinError):
    """The design has no usable columns."""


class InvalidProbability(CollinError):
    """A probability argument lies outside the open interval (0, 1)."""


class InvalidGamma(CollinError):
    """The shared-component weight must satisfy 0 <= gamma < 1."""


class InvalidDims(CollinError):
    """Generator dimensions are infeasible."""


class MixedResponse(CollinError):
    """Model comparison requires all fits to share one response vector."""


class ParseError(CollinError):
    """A CSV row could not be parsed."""

    def __init__(self, line: int, col: int, message: str):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, column {col}: {message}")


class MissingResponse(CollinError):
    """The requested response column is not in the CSV header."""


class NonNumericCell(CollinError):
    """A CSV body cell is not a number."""

    def __init__(self, line: int, col: int, value: str):
        self.line = line
        self.col = col
        self.value = value
        super().__init__(f"line {line}, column {col}: non-numeric cell {value!r}")


class TooFewRows(CollinError):
    """The file has too few observations for its column count."""
