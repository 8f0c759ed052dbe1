"""
Exception hierarchy for the lab.

Every error raised on purpose by the numerical packages derives from LabError
so the CLI can map it to an exit code and a failing result record.
"""

from typing import Any, Dict, Optional


class LabError(Exception):
    """Base class for all lab errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        if not self.details:
            return self.message
        extra = ", ".join(f"{k}={v}" for k, v in self.details.items())
        return f"{self.message} ({extra})"


class MalformedInputError(LabError, ValueError):
    """Input violates a documented precondition on shape, size or range."""


class SingularityError(LabError, ValueError):
    """A closed-form evaluator was asked for its value at a singular point."""


class AccuracyError(LabError):
    """A numerical routine did not reach its tolerance."""

    def __init__(self, message: str, achieved: float, target: float, **details: Any):
        super().__init__(message, {"achieved": achieved, "target": target, **details})
        self.achieved = achieved
        self.target = target


class BudgetError(LabError):
    """A request exceeds the enumeration, term or integer budget."""


class ScheduleTooSmallError(LabError):
    """A modulation schedule fails the frequency dominance inequality."""


class PreconditionError(LabError):
    """An operation was called on input it is not defined for."""


class InternalConsistencyError(LabError):
    """Two independent computations of the same quantity disagree."""


class NumericalError(LabError):
    """Non-finite values appeared during an iteration."""


class UnknownOperatorError(LabError, LookupError):
    """An operator name is not registered."""


class ConfigError(LabError):
    """Experiment configuration could not be parsed or validated."""


class AssertionFailure(LabError):
    """A verification ran to completion but its check did not pass."""
