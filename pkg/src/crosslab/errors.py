"""Exception types shared across the package.

Every error raised on a documented failure path derives from
:class:`CrosslabError`, so callers (and the CLI) can distinguish usage
problems from resource exhaustion and from internal invariant violations.
"""

from __future__ import annotations


class CrosslabError(Exception):
    """Base class for all package errors."""


class InputError(CrosslabError, ValueError):
    """Malformed or out-of-contract input (bad graph text, bad parameter)."""


class ParseError(InputError):
    """A graph serialization could not be decoded."""


class CeilingExceeded(InputError):
    """An enumeration request exceeded the supported vertex ceiling."""


class InputTooLarge(InputError):
    """A solver request exceeded the supported edge ceiling."""


class VertexNotFound(InputError):
    """An operation referenced a vertex id that is not in the graph."""


class InvalidPlan(InputError):
    """A vertex split plan's blocks do not partition the neighborhood."""


class InvalidProbability(InputError):
    """A probability parameter is outside [0, 1]."""


class ClassEmpty(InputError):
    """No graph in the class satisfies the requested (n, e) constraints."""


class PreconditionFailed(InputError):
    """A documented precondition of a harness routine does not hold."""


class EmptyGrid(InputError):
    """An estimation request produced no usable grid points."""


class CertificateError(CrosslabError):
    """A drawing certificate failed verification."""


class BudgetExceeded(CrosslabError):
    """A search ran out of its step budget before reaching an exact answer.

    Carries the best sound bounds established before the budget tripped.
    """

    def __init__(self, message: str, lower_bound: int = 0,
                 upper_bound: int | None = None, certificate=None):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.certificate = certificate


class InternalError(CrosslabError):
    """An internal invariant failed; indicates a bug, not a usage error."""
