"""Shared exception types."""
from __future__ import annotations


class AmbientMismatch(ValueError):
    """Operands live in polynomial rings of different widths."""


class ImproperIdeal(ValueError):
    """The operation needs a nonzero proper monomial ideal."""


class CapExceeded(RuntimeError):
    """A guarded enumeration grew past its configured cap.

    Raised instead of silently grinding through an infeasible computation;
    callers that support partial output catch it and report what they have.
    """

    def __init__(self, what: str, limit: int, actual: int):
        super().__init__(f"{what}: {actual} exceeds cap {limit}")
        self.what = what
        self.limit = limit
        self.actual = actual
