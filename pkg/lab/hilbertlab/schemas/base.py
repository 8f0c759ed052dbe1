"""
Base schemas for the lab.

Contains the common base classes used across all schemas.
"""

from pydantic import BaseModel, ConfigDict


class LabBaseModel(BaseModel):
    """
    Base model for all lab schemas.

    Disables protected_namespaces to allow 'model_' prefixed fields and
    rejects unknown fields so config typos surface as errors.
    """
    model_config = ConfigDict(protected_namespaces=(), extra="forbid")


class FrozenLabModel(LabBaseModel):
    """Immutable, hashable value object (intervals, spaces, schedules)."""
    model_config = ConfigDict(protected_namespaces=(), extra="forbid", frozen=True)
