"""
Schemas package - pydantic models for validated values, reports and records.
"""

from hilbertlab.schemas.base import LabBaseModel, FrozenLabModel
from hilbertlab.schemas.dyadic import DyadicInterval, intervals_up_to
from hilbertlab.schemas.space import SpaceDescriptor, conjugate_exponent
from hilbertlab.schemas.sign import Sign, BOTH_SIGNS
from hilbertlab.schemas.modulation import ModulationSchedule
from hilbertlab.schemas.reports import (
    C0Estimate,
    DistributionReport,
    WeakFormReport,
    ModulationReport,
    LemmaChainReport,
    NormEstimate,
    ComparisonRow,
)
from hilbertlab.schemas.experiment import ExperimentConfig, ResultRecord, SUBCOMMANDS

__all__ = [
    # Base
    "LabBaseModel",
    "FrozenLabModel",

    # Domain values
    "DyadicInterval",
    "intervals_up_to",
    "SpaceDescriptor",
    "conjugate_exponent",
    "Sign",
    "BOTH_SIGNS",
    "ModulationSchedule",

    # Reports
    "C0Estimate",
    "DistributionReport",
    "WeakFormReport",
    "ModulationReport",
    "LemmaChainReport",
    "NormEstimate",
    "ComparisonRow",

    # Experiments
    "ExperimentConfig",
    "ResultRecord",
    "SUBCOMMANDS",
]
