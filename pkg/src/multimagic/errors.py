"""Exception hierarchy shared by all construction and verification modules."""

from __future__ import annotations


class MultimagicError(Exception):
    """Base class for every error raised by this package."""


class NoSuchObject(MultimagicError):
    """The requested combinatorial object does not exist for these parameters."""


class ConstructionLimit(MultimagicError):
    """The object may exist, but no built-in construction covers these parameters."""


class OrderMismatch(MultimagicError, ValueError):
    pass


class DegreeMismatch(MultimagicError, ValueError):
    pass


class DimensionError(MultimagicError, ValueError):
    pass


class NonIntegralConstant(MultimagicError, ArithmeticError):
    pass


class NotNormalized(MultimagicError, ValueError):
    pass


class EvenDegreeRequired(MultimagicError, ValueError):
    pass


class SeedNotMultimagic(MultimagicError, ValueError):
    pass


class IngredientInvalid(MultimagicError, ValueError):
    """An input to a composition failed its precondition check."""

    def __init__(self, message: str, *, ingredient: str | None = None):
        super().__init__(message)
        self.ingredient = ingredient


class UnsupportedDegree(MultimagicError, ValueError):
    pass


class ParseError(MultimagicError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class VerificationFailed(MultimagicError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class CatalogCorrupt(MultimagicError):
    pass


class NotFound(MultimagicError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class MissingSeed(MultimagicError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
