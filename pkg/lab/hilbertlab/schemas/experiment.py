"""
Experiment configuration and result record schemas.
"""

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import Field, field_validator

from hilbertlab.core.config import settings
from hilbertlab.schemas.base import LabBaseModel
from hilbertlab.schemas.space import SpaceDescriptor

SUBCOMMANDS = (
    "verify-lemma",
    "verify-weak-form",
    "verify-modulation",
    "verify-distribution",
    "estimate-norms",
    "materialize",
)


class ExperimentConfig(LabBaseModel):
    """
    Fully resolved configuration of one CLI run.

    Every record written by the run echoes this model, so a result file is
    self-describing.
    """
    subcommand: str = Field(..., description="One of SUBCOMMANDS")
    depth: int = Field(4, ge=0, description="Truncation depth K")
    grid: int = Field(256, ge=4, description="Circle grid size N (power of two)")
    order: int = Field(3, ge=1, description="Fourier truncation order M")
    spaces: List[str] = Field(default_factory=lambda: ["scalar"], description="Space labels")
    exponents: List[float] = Field(default_factory=lambda: [2.0], description="Exponents p")
    operators: List[str] = Field(default_factory=lambda: ["S0"], description="Operators to materialize")
    trials: int = Field(10, ge=1)
    restarts: int = Field(default_factory=lambda: settings.POWER_RESTARTS, ge=1)
    iterations: int = Field(default_factory=lambda: settings.POWER_ITERATIONS, ge=1)
    tol: float = Field(1e-9, gt=0, description="Pass threshold for residual checks")
    slack: float = Field(default_factory=lambda: settings.THEOREM_SLACK, ge=1.0)
    budget: int = Field(default_factory=lambda: settings.UMD_BUDGET, ge=1)
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED)
    output: Optional[Path] = Field(None, description="Result file; printed to stdout when absent")
    format: Literal["csv", "json"] = "csv"

    @field_validator("subcommand")
    @classmethod
    def validate_subcommand(cls, v: str) -> str:
        if v not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand '{v}'")
        return v

    @field_validator("grid")
    @classmethod
    def validate_grid(cls, v: int) -> int:
        if v & (v - 1):
            raise ValueError("grid must be a power of two")
        return v

    @field_validator("spaces")
    @classmethod
    def validate_spaces(cls, v: List[str]) -> List[str]:
        for label in v:
            SpaceDescriptor.parse(2.0, label)
        return v

    @field_validator("exponents")
    @classmethod
    def validate_exponents(cls, v: List[float]) -> List[float]:
        if not v or any(not 1.0 < p < float("inf") for p in v):
            raise ValueError("exponents must lie in (1, inf)")
        return v

    def space_descriptors(self, p: float) -> List[SpaceDescriptor]:
        return [SpaceDescriptor.parse(p, label) for label in self.spaces]

    def echo(self) -> Dict[str, Any]:
        """JSON-safe dump used as the params of every record."""
        return self.model_dump(mode="json")


class ResultRecord(LabBaseModel):
    """One measured case of an experiment."""
    experiment_id: str
    subcommand: str
    case: str = Field(..., description="Name of the checked case within the experiment")
    params: Dict[str, Any] = Field(default_factory=dict)
    values: Dict[str, float] = Field(default_factory=dict)
    residuals: Dict[str, float] = Field(default_factory=dict)
    flags: Dict[str, bool] = Field(default_factory=dict)
    passed: bool = True
    wall_time_s: float = 0.0
    error: Optional[str] = None
