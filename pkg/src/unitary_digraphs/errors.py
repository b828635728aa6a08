"""Exception types raised across the package."""

from __future__ import annotations


class UnitaryDigraphError(ValueError):
    """Base class for all errors raised by this package."""


class PreconditionError(UnitaryDigraphError):
    """An operation was called outside its domain."""


class NotWellFormedError(PreconditionError):
    """A pattern or digraph has a zero row or zero column (source or sink)."""

    def __init__(self, message: str, offenders=()):
        super().__init__(message)
        self.offenders = tuple(offenders)


class NotDegreeBalancedError(PreconditionError):
    """Some vertex has invalency different from its outvalency."""

    def __init__(self, vertex: int, invalency: int, outvalency: int):
        super().__init__(
            f"vertex {vertex} is unbalanced: invalency {invalency}, outvalency {outvalency}"
        )
        self.vertex = vertex
        self.invalency = invalency
        self.outvalency = outvalency


class NotStronglyConnectedError(PreconditionError):
    """The digraph has more than one nontrivial strong component."""


class SynthesisError(PreconditionError):
    """No constructive synthesis applies to the given pattern."""


class SearchLimitExceeded(UnitaryDigraphError):
    """An exhaustive search refused to run because its size cap was exceeded.

    Raised instead of returning a possibly wrong answer.
    """


class RankDeficientError(UnitaryDigraphError):
    """The polar factor is not unique because the input is numerically singular."""


class ParseError(UnitaryDigraphError):
    """Malformed input file."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
