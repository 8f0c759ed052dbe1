"""
Unit tests for the quarter projection and the constant c0.

Tests quadrature-based averages including:
- Quarter averages of step functions and of H phi+-
- c0 by quadrature and by the alternating series
- Pairing moments and the averaging-projection identities
"""

import math

import numpy as np
import pytest

from hilbertlab.circle.functions import PHI_SIGNS, ClosedFormFunction, closed_form, quarter_step_function
from hilbertlab.circle.quadrature import (
    catalan_series,
    circle_mean,
    circle_pairing,
    compute_c0,
    compute_c0_estimate,
    integrate_panel,
    pairing_moment,
    project_quarters,
    quarter_averages_of_H_phi,
    quarter_pairing,
)
from hilbertlab.core.config import settings
from hilbertlab.exceptions import AccuracyError
from hilbertlab.schemas.sign import Sign

CATALAN = 0.915965594177219015054603514932384110774


class TestProjectQuarters:
    """Test suite for project_quarters."""

    def test_phi_plus(self):
        """Test that phi+ is constant on quarters."""
        # Act
        averages = project_quarters(closed_form("phi+"))

        # Assert
        np.testing.assert_allclose(averages, [-1.0, 1.0, 1.0, -1.0], atol=1e-12)

    def test_constant(self):
        """Test the constant 1."""
        # Act & Assert
        np.testing.assert_allclose(project_quarters(quarter_step_function([1, 1, 1, 1])), 1.0, atol=1e-12)

    def test_projection_is_idempotent(self):
        """Test projecting the step function built from a projection."""
        # Arrange
        averages = project_quarters(closed_form("H_phi+"))

        # Act
        again = project_quarters(quarter_step_function(averages))

        # Assert
        np.testing.assert_allclose(again, averages, atol=1e-12)

    def test_projection_is_self_adjoint(self):
        """Test (pi f, g) = (pi f, pi g) for a smooth g."""
        # Arrange
        f_bar = project_quarters(closed_form("H_phi-"))
        g = ClosedFormFunction("cos_plus_sin2", lambda x: np.cos(x) + np.sin(2.0 * x))

        # Act
        direct = circle_pairing(quarter_step_function(f_bar), g)
        projected = quarter_pairing(f_bar, project_quarters(g))

        # Assert
        assert direct == pytest.approx(projected, abs=1e-9)

    @pytest.mark.parametrize("name", ["phi+", "phi-", "H_phi+", "H_phi-"])
    def test_zero_mean(self, name):
        """Test E phi = E H phi = 0."""
        # Act & Assert
        assert circle_mean(closed_form(name)) == pytest.approx(0.0, abs=1e-9)


class TestConstantC0:
    """Test suite for c0."""

    def test_value(self):
        """Test c0 = 8 Catalan / pi^2."""
        # Act
        c0 = compute_c0()

        # Assert
        assert c0 == pytest.approx(8.0 * CATALAN / math.pi ** 2, abs=1e-10)
        assert c0 == pytest.approx(0.742454, abs=1e-6)

    def test_two_ways_agree(self):
        """Test quadrature against the series."""
        # Act
        estimate = compute_c0_estimate()

        # Assert
        assert estimate.difference <= 1e-9
        assert estimate.quadrature == pytest.approx(estimate.series, abs=1e-9)
        assert estimate.series_terms > 1000

    def test_catalan_series(self):
        """Test the alternating series to its tail bound."""
        # Act
        value, terms = catalan_series(1e-8)

        # Assert
        assert value == pytest.approx(CATALAN, abs=1e-8)
        assert 1.0 / (2 * terms - 1) ** 2 < 1e-8

    def test_H_phi_plus_projection(self):
        """Test pi H phi+ = c0 phi-."""
        # Act
        averages = np.array(quarter_averages_of_H_phi(Sign.PLUS))

        # Assert
        np.testing.assert_allclose(averages, compute_c0() * PHI_SIGNS[Sign.MINUS], atol=1e-9)

    def test_H_phi_minus_projection(self):
        """Test pi H phi- = -c0 phi+."""
        # Act
        averages = np.array(quarter_averages_of_H_phi(Sign.MINUS))

        # Assert
        np.testing.assert_allclose(averages, -compute_c0() * PHI_SIGNS[Sign.PLUS], atol=1e-9)


class TestPairingMoment:
    """Test suite for E[(H phi^sigma) phi^eta]."""

    @pytest.mark.parametrize(
        "sigma,eta,factor",
        [
            (Sign.PLUS, Sign.PLUS, 0.0),
            (Sign.MINUS, Sign.MINUS, 0.0),
            (Sign.PLUS, Sign.MINUS, 1.0),
            (Sign.MINUS, Sign.PLUS, -1.0),
        ],
    )
    def test_moments(self, sigma, eta, factor):
        """Test the four moments against 0 and +-c0."""
        # Act
        moment = pairing_moment(sigma, eta)

        # Assert
        assert moment == pytest.approx(factor * compute_c0(), abs=1e-9)

    def test_moment_matches_direct_pairing(self):
        """Test the quarter-weighted sum against a full quadrature of the product."""
        # Act
        direct = circle_pairing(closed_form("H_phi+"), closed_form("phi-"))

        # Assert
        assert direct == pytest.approx(pairing_moment(Sign.PLUS, Sign.MINUS), abs=1e-9)


class TestIntegratePanel:
    """Test suite for the adaptive integrator wrapper."""

    def test_polynomial(self):
        """Test an exact integral with its error estimate."""
        # Act
        value, error = integrate_panel(lambda x: x ** 2, 0.0, 3.0)

        # Assert
        assert value == pytest.approx(9.0)
        assert error < 1e-9

    def test_accuracy_error(self, monkeypatch):
        """Test that an unresolved integrand reports the achieved error."""
        # Arrange
        monkeypatch.setattr(settings, "QUAD_LIMIT", 1)

        # Act & Assert
        with pytest.raises(AccuracyError) as exc_info:
            integrate_panel(lambda x: math.exp(x) * math.sin(300.0 * x), 0.0, math.pi / 2.0)
        assert exc_info.value.achieved > exc_info.value.target
