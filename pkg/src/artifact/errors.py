"""Shared exception types."""

from .graphs import PathBudgetExceeded

__all__ = ["UndefinedMeasureError", "PathBudgetExceeded"]


class UndefinedMeasureError(ValueError):
    """A measure is mathematically undefined for the given input.

    Report builders catch this and record an explicit absent value instead
    of a number.
    """
