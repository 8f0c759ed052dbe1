"""
Exceptions package - error hierarchy and CLI exit-code handlers.
"""

from hilbertlab.exceptions.base import (
    LabError,
    MalformedInputError,
    SingularityError,
    AccuracyError,
    BudgetError,
    ScheduleTooSmallError,
    PreconditionError,
    InternalConsistencyError,
    NumericalError,
    UnknownOperatorError,
    ConfigError,
    AssertionFailure,
)

__all__ = [
    "LabError",
    "MalformedInputError",
    "SingularityError",
    "AccuracyError",
    "BudgetError",
    "ScheduleTooSmallError",
    "PreconditionError",
    "InternalConsistencyError",
    "NumericalError",
    "UnknownOperatorError",
    "ConfigError",
    "AssertionFailure",
]
