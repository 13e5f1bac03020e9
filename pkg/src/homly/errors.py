"""Exception hierarchy shared by all homly modules."""
from __future__ import annotations


class HomlyError(Exception):
    """Base class for every error raised by homly."""


class ConfigurationError(HomlyError):
    """Scalars or tensors built over incompatible parameter lists."""


class DimensionError(HomlyError, ValueError):
    pass


class SubstitutionError(HomlyError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class PreconditionError(HomlyError):
    """A construction or checker refused its input.

    ``report`` carries the failing :class:`~homly.identities.CheckReport`
    when the refusal came from a verified hypothesis.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ParseError(HomlyError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)


class UnknownAlgebraError(HomlyError, LookupError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
