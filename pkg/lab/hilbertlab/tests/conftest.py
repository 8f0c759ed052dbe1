"""
Pytest configuration and shared fixtures.

This file provides reusable test fixtures for:
- Seeded random generators
- Sample expansions and toss functions
- Target spaces
- The CLI runner with an isolated output directory
"""

import logging
from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner

from hilbertlab.dyadic.haar import HaarExpansion
from hilbertlab.dyadic.operators import reduce_tilde
from hilbertlab.schemas.space import SpaceDescriptor
from hilbertlab.toss.lift import random_toss_function


# ==================== Logging ====================

@pytest.fixture(autouse=True)
def restore_root_logger():
    """Drop the handlers setup_logging installs and restore the root level after each test."""
    root = logging.getLogger()
    level = root.level
    yield
    for handler in list(root.handlers):
        if type(handler) in (logging.StreamHandler, logging.FileHandler):
            root.removeHandler(handler)
            handler.close()
    root.setLevel(level)


# ==================== Random Inputs ====================

@pytest.fixture
def rng() -> np.random.Generator:
    """Deterministic generator; every test gets a fresh one."""
    return np.random.default_rng(20240611)


@pytest.fixture
def scalar_expansion(rng) -> HaarExpansion:
    """Random scalar expansion of depth 3 (16 cells)."""
    return HaarExpansion.random(3, 1, rng)


@pytest.fixture
def vector_expansion(rng) -> HaarExpansion:
    """Random R^2-valued expansion of depth 3."""
    return HaarExpansion.random(3, 2, rng)


@pytest.fixture
def reduced_expansion(rng) -> HaarExpansion:
    """Random scalar expansion of depth 3 with zero mean and zero h_I0 coefficient."""
    return reduce_tilde(HaarExpansion.random(3, 1, rng))


@pytest.fixture
def toss_pair(rng):
    """A reduced generic toss function F and an unreduced G, depth 2, scalar."""
    F = random_toss_function(2, 1, rng, reduced=True)
    G = random_toss_function(2, 1, rng, reduced=False)
    return F, G


# ==================== Spaces ====================

@pytest.fixture
def scalar_space() -> SpaceDescriptor:
    return SpaceDescriptor.scalar(3.0)


@pytest.fixture
def lq_space() -> SpaceDescriptor:
    """L^3 with values in l_3^2."""
    return SpaceDescriptor.lq(3.0, 3.0, 2)


# ==================== CLI ====================

@pytest.fixture
def cli_runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def output_dir(tmp_path, monkeypatch) -> Path:
    """Result directory; also the default output directory of the settings."""
    from hilbertlab.core.config import settings

    monkeypatch.setattr(settings, "LAB_OUTPUT_DIR", tmp_path / "results")
    return tmp_path
