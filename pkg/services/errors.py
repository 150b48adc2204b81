"""
Exception hierarchy shared by the services.

Precondition failures are InvalidInputError (a ValueError, so callers that only
care about "bad arguments" can catch the builtin). A TheoremViolation is a
finding: the search ran to completion and a witness that a theorem guarantees
was not there.
"""

from typing import Optional, Sequence, Tuple, Any


class DigitalTopologyError(Exception):
    """Base class for every error raised by the services package."""


class InvalidInputError(DigitalTopologyError, ValueError):
    """
    A precondition of an operation does not hold.

    Args:
        message: Human-readable description of the failed condition
        pairs: Optional offending point pairs (e.g. adjacent points whose
            images break continuity)
    """

    def __init__(self, message: str, pairs: Optional[Sequence[Tuple[Any, Any]]] = None):
        super().__init__(message)
        self.pairs = list(pairs or [])


class DisconnectedCodomainError(InvalidInputError):
    """An adjacent pair is mapped into two different codomain components."""

    def __init__(self, a, b):
        super().__init__(f"f({a}) and f({b}) lie in different codomain components", [(a, b)])
        self.pair = (a, b)


class NotAnInvolutionError(InvalidInputError):
    """The proposed antipodal map is not a free continuous involution."""


class UnsupportedError(DigitalTopologyError):
    """The request is well formed but outside the supported range."""


class TheoremViolation(DigitalTopologyError):
    """A guaranteed witness was not found; either the code or the theorem is wrong."""

    def __init__(self, message: str, instance: Optional[dict] = None):
        super().__init__(message)
        self.instance = instance or {}


class PgmParseError(InvalidInputError):
    """Malformed PGM data; `offset` is the byte position where parsing stopped."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class UnsupportedFormatError(PgmParseError):
    """A netpbm file that is not a graymap (P1, P3, P4, P6, ...)."""
