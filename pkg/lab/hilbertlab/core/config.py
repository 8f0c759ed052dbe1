"""
Core configuration management using Pydantic Settings.

This module centralizes all environment variables and numerical defaults
shared by the dyadic, circle, toss, modulation and norms packages.
"""

# Load .env file first so os.getenv() works everywhere
from dotenv import load_dotenv
load_dotenv()

from pydantic_settings import BaseSettings
from pydantic import field_validator
from typing import Optional
from pathlib import Path
import logging


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # ==================== Application ====================
    APP_NAME: str = "Hilbert Lab"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False
    ENVIRONMENT: str = "development"  # development, ci

    # ==================== Parallelism ====================
    WORKERS: int = 1  # restarts / quadrature panels run on this many threads

    # ==================== Output ====================
    # .npy matrices of materialize land here without --output; result records then go to stdout
    LAB_OUTPUT_DIR: Path = Path("results")

    # ==================== Logging ====================
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "text"  # "text" or "json"
    LOG_FILE: Optional[Path] = None

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in logging.getLevelNamesMapping():
            raise ValueError(f"Unknown LOG_LEVEL: {v}")
        return level

    @field_validator("LOG_FORMAT")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        if v not in ("text", "json"):
            raise ValueError("LOG_FORMAT must be 'text' or 'json'")
        return v

    @field_validator("LOG_FILE")
    @classmethod
    def create_log_dir(cls, v: Optional[Path]) -> Optional[Path]:
        if v:
            v.parent.mkdir(parents=True, exist_ok=True)
        return v

    # ==================== Quadrature ====================
    QUAD_ABS_TOL: float = 1e-10
    QUAD_LIMIT: int = 200  # subintervals per panel
    QUAD_ACCURACY_SLACK: float = 10.0  # error estimate may exceed the target by this factor

    # ==================== Circle Analysis ====================
    SPECTRAL_ORDER: int = 1024
    SINGULARITY_EXCLUSION: float = 0.1  # probe grids stay this far from singular points
    C0_TOL: float = 1e-9
    SERIES_TAIL_TOL: float = 1e-12

    # ==================== Toss Model ====================
    ENUMERATION_MAX_DEPTH: int = 8  # 4^(K+1) quarter states at most

    # ==================== Modulation ====================
    MODULATION_ORDER: int = 9
    MODULATION_MAX_DEPTH: int = 5
    MODULATION_MAX_TERMS: int = 2_000_000

    # ==================== Norm Estimation ====================
    POWER_ITERATIONS: int = 300
    POWER_TOL: float = 1e-10
    POWER_RESTARTS: int = 8
    MONOTONE_SLACK: float = 1e-12
    UMD_BUDGET: int = 64
    THEOREM_SLACK: float = 1.10

    # ==================== Experiments ====================
    DEFAULT_SEED: int = 7

    @field_validator(
        "QUAD_ABS_TOL", "C0_TOL", "SERIES_TAIL_TOL", "POWER_TOL",
        "MONOTONE_SLACK", "SINGULARITY_EXCLUSION",
    )
    @classmethod
    def validate_positive_tolerance(cls, v: float) -> float:
        if not v > 0:
            raise ValueError("tolerances must be positive")
        return v

    @field_validator("WORKERS", "QUAD_LIMIT", "POWER_ITERATIONS", "POWER_RESTARTS", "UMD_BUDGET")
    @classmethod
    def validate_positive_count(cls, v: int) -> int:
        if v < 1:
            raise ValueError("counts must be at least 1")
        return v

    # Pydantic v2 configuration
    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": True,
        "extra": "ignore",  # Ignore extra fields in .env
    }


# Singleton instance
settings = Settings()


def quadrature_target() -> float:
    """Largest quadrature error estimate accepted before raising AccuracyError."""
    return settings.QUAD_ABS_TOL * settings.QUAD_ACCURACY_SLACK


def get_output_dir() -> Path:
    """Directory for materialized matrices when no --output is given, created on demand."""
    out = settings.LAB_OUTPUT_DIR
    out.mkdir(parents=True, exist_ok=True)
    return out
