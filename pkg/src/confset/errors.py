"""Shared exception types."""

from __future__ import annotations


class GroupSpecError(ValueError):
    """Group spec text was rejected; ``position`` is the offending index."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class OrderCapExceeded(RuntimeError):
    """A construction would exceed the configured element-count cap."""


class OracleDisagreement(RuntimeError):
    """Two independent computations of the same value disagreed."""
