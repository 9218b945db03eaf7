"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "SumGraphError",
    "BadParameterError",
    "NotLatinSquareError",
    "NoIdentityError",
    "NoInverseError",
    "NotAssociativeError",
    "NotASubgroupError",
    "NotNormalError",
    "NotAbelianError",
    "NotDedekindError",
    "PreconditionViolatedError",
    "InternalInconsistencyError",
    "ParseError",
]


class SumGraphError(Exception):
    """Base class for every error raised by this package."""


class BadParameterError(SumGraphError, ValueError):
    """An argument is outside the documented range or of the wrong shape."""


class NotLatinSquareError(SumGraphError, ValueError):
    """A Cayley table has a row or column that is not a permutation."""


class NoIdentityError(SumGraphError, ValueError):
    """A Cayley table has no two-sided identity element."""


class NoInverseError(SumGraphError, ValueError):
    """Some element of a Cayley table has no two-sided inverse."""


class NotAssociativeError(SumGraphError, ValueError):
    """A Cayley table violates associativity; the message names a triple."""


class NotASubgroupError(SumGraphError, ValueError):
    """A member set is not closed under products and inverses."""


class NotNormalError(SumGraphError, ValueError):
    """A subgroup is not normal where normality is required."""


class NotAbelianError(SumGraphError, ValueError):
    """A group is not abelian where commutativity is required."""


class NotDedekindError(SumGraphError, ValueError):
    """A group has a non-normal subgroup where all must be normal."""


class PreconditionViolatedError(SumGraphError):
    """A documented precondition of an operation does not hold."""


class InternalInconsistencyError(SumGraphError, RuntimeError):
    """A constructed object failed its own validity check; this is a bug."""


class ParseError(SumGraphError, ValueError):
    """A group expression failed to parse.

    Carries the byte offset of the failure and the set of tokens that
    would have been accepted there.
    """

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        self.offset = offset
        self.expected = tuple(expected)
        detail = f"{message} at offset {offset}"
        if expected:
            detail += f" (expected: {', '.join(expected)})"
        super().__init__(detail)
