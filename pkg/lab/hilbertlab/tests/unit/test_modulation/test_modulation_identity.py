"""
Unit tests for the modulation schedule, the modulation identity and the
psi-averaging chain.
"""

import numpy as np
import pytest

from hilbertlab.exceptions import BudgetError, MalformedInputError, ScheduleTooSmallError
from hilbertlab.modulation import (
    DEFAULT_PSIS,
    build_schedule,
    check_dominance,
    expand_toss_function,
    lemma_chain,
    modulate,
    modulated_pairing,
    spectrum_bounds,
    theta_grid,
    verify_modulation_identity,
)
from hilbertlab.toss.lift import random_toss_function


class TestSchedule:
    """Test suite for spectrum_bounds and build_schedule."""

    def test_recursion(self):
        """Test n_0 = 1 and n_{k+1} = 2 n_k N_k."""
        # Act
        schedule = build_schedule((2, 3))

        # Assert
        assert schedule.n == (1, 4, 24)
        assert schedule.frequencies(2) == (1, 4)

    def test_rejects_zero_bound(self):
        """Test N_k >= 1."""
        # Act & Assert
        with pytest.raises(MalformedInputError):
            build_schedule((2, 0))

    def test_integer_budget(self):
        """Test that frequencies beyond 2^52 are refused."""
        # Act & Assert
        with pytest.raises(BudgetError):
            build_schedule((1 << 30, 1 << 30))

    def test_spectrum_bounds(self, toss_pair):
        """Test cumulative bounds for a generic depth-2 toss function at order 3."""
        # Arrange
        F, _ = toss_pair

        # Act
        bounds = spectrum_bounds(F, 3)

        # Assert
        assert bounds == (3, 6)

    def test_minimal_schedule_dominates(self, toss_pair):
        """Test that the schedule built from the bounds satisfies dominance."""
        # Arrange
        F, _ = toss_pair
        expanded = expand_toss_function(F, 3)

        # Act
        schedule = build_schedule(spectrum_bounds(expanded))

        # Assert
        assert check_dominance(expanded, schedule)
        assert not check_dominance(expanded, build_schedule((1, 1)))


class TestModulationIdentity:
    """Test suite for verify_modulation_identity."""

    def test_identity_is_exact(self, toss_pair, rng):
        """Test that residuals are round-off only."""
        # Arrange
        F, _ = toss_pair
        thetas = rng.uniform(-np.pi, np.pi, size=(3, 3))

        # Act
        report = verify_modulation_identity(F, 3, thetas, DEFAULT_PSIS)

        # Assert
        assert report.max_residual < 1e-10
        assert set(report.level_residuals) == {"root", "level_0", "level_1"}
        assert report.dominance_ok
        assert report.order == 3

    def test_lifted_expansion(self, reduced_expansion, rng):
        """Test that expansions are lifted first."""
        # Arrange
        thetas = rng.uniform(-np.pi, np.pi, size=(2, 4))

        # Act
        report = verify_modulation_identity(reduced_expansion, 2, thetas, [0.1, 2.0])

        # Assert
        assert report.max_residual < 1e-10
        assert report.n_terms > 0

    def test_undersized_schedule(self, toss_pair):
        """Test that a schedule without dominance is refused."""
        # Arrange
        F, _ = toss_pair

        # Act & Assert
        with pytest.raises(ScheduleTooSmallError):
            verify_modulation_identity(F, 3, np.zeros((1, 3)), [0.0], schedule=build_schedule((1, 1)))

    def test_probe_shape(self, toss_pair):
        """Test one probe angle per variable."""
        # Arrange
        F, _ = toss_pair

        # Act & Assert
        with pytest.raises(MalformedInputError):
            verify_modulation_identity(F, 3, np.zeros((1, 2)), [0.0])

    def test_modulate_without_check(self, toss_pair):
        """Test that check=False skips the dominance test."""
        # Arrange
        F, _ = toss_pair
        level = expand_toss_function(F, 3).levels[0]

        # Act
        polynomial = modulate(level, build_schedule((1, 1)), [0.0, 0.0], check=False)

        # Assert
        assert polynomial.frequencies.shape[0] > 0


class TestLemmaChain:
    """Test suite for the psi-averaging chain."""

    def test_theta_grid(self):
        """Test the tensor grid layout."""
        # Act
        grid = theta_grid(2, 3)

        # Assert
        assert grid.shape == (9, 2)
        np.testing.assert_allclose(grid[1], [-np.pi, -np.pi + 2.0 * np.pi / 3.0])

    @pytest.mark.parametrize("depth,order", [(1, 3), (2, 2)])
    def test_pairings_agree(self, rng, depth, order):
        """Test E<F^H, G>, the modulated pairing and E^psi E<H_psi Phi, Gamma> agree."""
        # Arrange
        F = random_toss_function(depth, 1, rng, reduced=True)
        G = random_toss_function(depth, 1, rng, reduced=False)

        # Act
        report = lemma_chain(F, G, order)

        # Assert
        assert report.max_spread < 1e-9
        assert report.truncated_pairing == pytest.approx(report.psi_hilbert_pairing, abs=1e-9)

    def test_modulated_pairing_ignores_psi(self, rng):
        """Test that shifting theta by n psi leaves the truncated pairing unchanged."""
        # Arrange
        F = random_toss_function(1, 1, rng, reduced=True)
        G = random_toss_function(1, 1, rng, reduced=False)
        schedule = build_schedule(spectrum_bounds(expand_toss_function(F, 3)))
        report = lemma_chain(F, G, 3, schedule=schedule)

        # Act
        shifted = modulated_pairing(F, G, 3, schedule, 2.5)

        # Assert
        assert shifted == pytest.approx(report.truncated_pairing, abs=1e-9)

    def test_shape_mismatch(self, rng):
        """Test that F and G must share depth."""
        # Act & Assert
        with pytest.raises(MalformedInputError):
            lemma_chain(random_toss_function(1, 1, rng), random_toss_function(2, 1, rng), 2)
