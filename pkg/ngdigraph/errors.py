"""Exception hierarchy shared across the package."""

from __future__ import annotations

from typing import Optional


class NGDigraphError(Exception):
    """Base class for every error raised by ngdigraph."""


class DomainError(NGDigraphError, ValueError):
    """An operation received arguments outside its domain."""


class ParseError(NGDigraphError, ValueError):
    """A transformation tuple could not be parsed."""

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        self.reason = message
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ResourceLimitError(NGDigraphError):
    """A configured cap (arity or closure size) was exceeded."""


class ConfigError(NGDigraphError, ValueError):
    """Configuration values failed validation."""


class InvariantViolation(NGDigraphError, AssertionError):
    """Two independent computations of the same quantity disagree."""
