"""
Unit tests for the nonlinear power method and the norm estimates.
"""

import math

import numpy as np
import pytest

from hilbertlab.circle.quadrature import compute_c0
from hilbertlab.exceptions import MalformedInputError, NumericalError, PreconditionError
from hilbertlab.norms.estimates import (
    comparison_experiment,
    estimate_hp,
    estimate_mp_lower,
    estimate_sp,
    martingale_level_signs,
    sign_patterns,
    structured_patterns,
)
from hilbertlab.norms.operators import OperatorMatrix, materialize, norm_2_exact
from hilbertlab.norms.power import (
    duality_map,
    hilbert_starts,
    norm_p_lower,
    power_iteration,
    random_starts,
    top_singular_start,
)
from hilbertlab.schemas.experiment import ExperimentConfig
from hilbertlab.schemas.space import SpaceDescriptor


class TestDualityMap:
    """Test suite for the norming map J_p."""

    @pytest.mark.parametrize("space_fixture", ["scalar_space", "lq_space"])
    def test_norming(self, rng, request, space_fixture):
        """Test <J(u), u> = ||u||_p and ||J(u)||_p' = 1."""
        # Arrange
        space = request.getfixturevalue(space_fixture)
        u = rng.standard_normal((32, space.dim))

        # Act
        j = duality_map(u, space)

        # Assert
        assert np.mean(np.sum(j * u, axis=1)) == pytest.approx(space.norm(u), rel=1e-12)
        assert space.dual().norm(j) == pytest.approx(1.0, rel=1e-12)

    def test_zero(self, scalar_space):
        """Test J(0) = 0."""
        # Act & Assert
        assert not np.any(duality_map(np.zeros((4, 1)), scalar_space))


class TestPowerIteration:
    """Test suite for a single power-method run."""

    def test_monotone_ascent(self, rng):
        """Test that the objective never drops below the start value."""
        # Arrange
        op = materialize("S0", depth=3)
        space = SpaceDescriptor.scalar(3.0)
        start = rng.standard_normal(op.size)
        initial = space.norm((op.matrix @ (start / space.norm(start[:, None])))[:, None])

        # Act
        result = power_iteration(op.matrix, space, start, iterations=50, tol=1e-12)

        # Assert
        assert result.value >= initial - 1e-12
        assert result.vector.shape == (16, 1)
        assert result.direction == "primal"

    def test_zero_start(self):
        """Test that a zero start is refused."""
        # Arrange
        op = materialize("S0", depth=1)

        # Act & Assert
        with pytest.raises(NumericalError):
            power_iteration(op.matrix, SpaceDescriptor.scalar(2.0), np.zeros(4), 10, 1e-10)


class TestStarts:
    """Test suite for start vectors."""

    def test_random_starts_are_seeded(self):
        """Test reproducibility and the sign pattern."""
        # Act
        first = random_starts(8, 3, seed=11)
        second = random_starts(8, 3, seed=11)

        # Assert
        assert [label for label, _ in first] == ["random_0", "random_1", "random_2", "random_signs"]
        for (_, a), (_, b) in zip(first, second):
            np.testing.assert_array_equal(a, b)
        assert set(np.unique(first[-1][1])) <= {-1.0, 1.0}

    def test_top_singular_start(self):
        """Test the maximizer of ||M x||_2."""
        # Arrange
        matrix = np.diag([1.0, 3.0, 2.0])

        # Act
        vector = top_singular_start(matrix)

        # Assert
        np.testing.assert_allclose(np.abs(vector), [0.0, 1.0, 0.0], atol=1e-12)

    def test_hilbert_starts(self):
        """Test the cot profiles and the square wave."""
        # Act
        starts = hilbert_starts(16, 2, 4.0, 4.0 / 3.0)

        # Assert
        assert [label for label, _ in starts][-1] == "square_wave"
        assert len(starts) == 5
        assert all(vector.shape == (32,) for _, vector in starts)


class TestNormLowerBound:
    """Test suite for norm_p_lower and the estimates."""

    def test_S0_at_two(self):
        """Test the exact p = 2 anchor ||S0||_2 = 1."""
        # Arrange
        op = materialize("S0", depth=3)

        # Act
        estimate, maximizer = norm_p_lower(op, SpaceDescriptor.scalar(2.0), restarts=2, iterations=20)

        # Assert
        assert estimate.lower_bound == pytest.approx(1.0, abs=1e-9)
        assert estimate.lower_bound <= 1.0 + 1e-12
        assert maximizer.shape == (16, 1)
        assert estimate.direction in ("primal", "dual")

    def test_hilbert_at_two(self):
        """Test ||H||_2 = 1 on the grid."""
        # Act
        estimate = estimate_hp(2.0, 32, restarts=2, iterations=20)

        # Assert
        assert estimate.lower_bound == pytest.approx(1.0, abs=1e-9)
        assert estimate.operator == "hilbert"

    def test_sp_vector_valued(self, lq_space):
        """Test s_p with l_3^2 values."""
        # Act
        estimate = estimate_sp(3.0, lq_space, depth=2, restarts=2, iterations=50)

        # Assert
        assert estimate.space == "l3^2"
        assert estimate.lower_bound > 0.5
        assert estimate.p == 3.0

    def test_rejects_endpoint_inner_exponent(self):
        """Test that q = inf has no duality map."""
        # Arrange
        space = SpaceDescriptor.lq(3.0, math.inf, 2)
        op = materialize("S0", depth=1, space=space)

        # Act & Assert
        with pytest.raises(PreconditionError):
            norm_p_lower(op, space)

    def test_dimension_mismatch(self, lq_space):
        """Test that the operator dimension must match the space."""
        # Act & Assert
        with pytest.raises(PreconditionError):
            norm_p_lower(materialize("S0", depth=1), lq_space)

    def test_mp_exhaustive_at_two(self):
        """Test that every T_alpha is a contraction at p = 2."""
        # Act
        estimate = estimate_mp_lower(2.0, None, depth=1, budget=8, restarts=2, iterations=20)

        # Assert
        assert estimate.lower_bound == pytest.approx(1.0, abs=1e-9)
        assert estimate.best_start.split("/")[0] in {"exhaustive", "martingale_all_plus", "martingale_depth_alternating"}


class TestSignPatterns:
    """Test suite for the T_alpha sign patterns."""

    def test_exhaustive(self):
        """Test all 2^3 patterns at depth 1."""
        # Act
        patterns = list(sign_patterns(1, budget=8, seed=7))

        # Assert
        assert len(patterns) == 8
        assert {label for label, _ in patterns} == {"exhaustive"}

    def test_structured_then_random(self):
        """Test the budget-limited mix."""
        # Act
        patterns = list(sign_patterns(2, budget=5, seed=7))

        # Assert
        labels = [label for label, _ in patterns]
        assert labels == ["all_plus", "depth_alternating", "position_alternating", "random_0", "random_1"]
        assert all(signs.shape == (7,) for _, signs in patterns)

    def test_structured_values(self):
        """Test the alternating patterns in heap order."""
        # Act
        patterns = dict(structured_patterns(1))

        # Assert
        np.testing.assert_array_equal(patterns["depth_alternating"], [1.0, -1.0, -1.0])
        np.testing.assert_array_equal(patterns["position_alternating"], [1.0, 1.0, -1.0])


class TestComparisonExperiment:
    """Test suite for the s_p against h_p comparison."""

    def test_rows_at_two(self):
        """Test that at p = 2 all three norms are 1 and the bound holds."""
        # Arrange
        config = ExperimentConfig(
            subcommand="estimate-norms", depth=2, grid=16, restarts=2, iterations=20, budget=4
        )

        # Act
        rows = comparison_experiment(config)

        # Assert
        assert len(rows) == 1
        row = rows[0]
        assert row.s_p_lower == pytest.approx(1.0, abs=1e-9)
        assert row.h_p_lower == pytest.approx(1.0, abs=1e-9)
        assert row.m_p_lower == pytest.approx(1.0, abs=1e-9)
        assert row.within_bound
        assert row.inv_c0 == pytest.approx(1.0 / compute_c0())

    @pytest.mark.slow
    def test_within_bound_at_four(self):
        """Test s_4 / h_4 on l_3^4 values stays below slack / c0."""
        # Arrange
        config = ExperimentConfig(
            subcommand="estimate-norms",
            exponents=[4.0],
            spaces=["l3^4"],
            depth=3,
            grid=64,
            restarts=2,
            iterations=100,
            budget=4,
        )

        # Act
        rows = comparison_experiment(config)

        # Assert
        row = rows[0]
        assert row.space == "l3^4"
        assert row.ratio == pytest.approx(row.s_p_lower / row.h_p_lower)
        assert row.ratio <= row.slack * row.inv_c0
        assert row.within_bound


class TestRunArguments:
    """Test suite for the restart and iteration arguments of norm_p_lower."""

    def test_zero_restarts_is_honoured(self):
        """Test restarts=0 keeps only the random sign and top singular starts."""
        # Act
        estimate, _ = norm_p_lower(materialize("S0", depth=2), SpaceDescriptor.scalar(2.0), restarts=0, iterations=20)

        # Assert
        assert estimate.restarts == 4
        assert estimate.lower_bound == pytest.approx(1.0, abs=1e-9)

    def test_explicit_restarts_count(self):
        """Test that the run count follows the requested restarts."""
        # Act
        estimate, _ = norm_p_lower(materialize("S0", depth=2), SpaceDescriptor.scalar(2.0), restarts=2, iterations=20)

        # Assert
        assert estimate.restarts == 8

    @pytest.mark.parametrize("restarts,iterations", [(-1, 10), (2, 0)])
    def test_rejects_invalid_counts(self, restarts, iterations):
        """Test negative restarts and zero iterations are refused."""
        # Act & Assert
        with pytest.raises(MalformedInputError):
            norm_p_lower(materialize("S0", depth=1), SpaceDescriptor.scalar(2.0), restarts=restarts, iterations=iterations)


class TestTransposeDuality:
    """Test suite for ||T||_p = ||T^t||_p' on random matrices."""

    @pytest.mark.parametrize("symmetry", [1.0, -1.0])
    def test_transpose_at_conjugate_exponent(self, rng, symmetry):
        """Test symmetric and skew random matrices at p = 3 and p' = 3/2."""
        # Arrange
        base = rng.standard_normal((8, 8))
        op = OperatorMatrix("random", base + symmetry * base.T, 8)

        # Act
        at_p, _ = norm_p_lower(op, SpaceDescriptor.scalar(3.0), restarts=4, iterations=200)
        at_conjugate, _ = norm_p_lower(op.transpose(), SpaceDescriptor.scalar(1.5), restarts=4, iterations=200)

        # Assert
        assert at_p.lower_bound == pytest.approx(at_conjugate.lower_bound, rel=1e-9)

    def test_general_matrix_at_two(self, rng):
        """Test that a general matrix reaches its largest singular value at p = 2."""
        # Arrange
        op = OperatorMatrix("random", rng.standard_normal((8, 8)), 8)

        # Act
        estimate, _ = norm_p_lower(op, SpaceDescriptor.scalar(2.0), restarts=2, iterations=50)

        # Assert
        assert estimate.lower_bound == pytest.approx(norm_2_exact(op), rel=1e-9)


class TestDiagonalExample:
    """Test suite for the diagonal example diag(2, 1, ..., 1)."""

    @pytest.mark.parametrize("p", [1.5, 3.0, 4.0])
    def test_converges_to_largest_entry(self, p):
        """Test the estimate reaches 2 on the diagonal matrix."""
        # Arrange
        op = OperatorMatrix("diag", np.diag([2.0, 1.0, 1.0, 1.0]), 4)

        # Act
        estimate, maximizer = norm_p_lower(op, SpaceDescriptor.scalar(p), restarts=2, iterations=100)

        # Assert
        assert estimate.lower_bound == pytest.approx(2.0, abs=1e-9)
        assert estimate.lower_bound <= 2.0 + 1e-12
        assert np.argmax(np.abs(maximizer[:, 0])) == 0

    def test_power_iteration_from_random_start(self, rng):
        """Test a single run from a generic start climbs to 2."""
        # Arrange
        matrix = np.diag([2.0, 1.0, 1.0, 1.0])

        # Act
        result = power_iteration(matrix, SpaceDescriptor.scalar(3.0), rng.uniform(0.5, 1.0, 4), 500, 1e-14)

        # Assert
        assert result.value == pytest.approx(2.0, abs=1e-6)


class TestDepthMonotonicity:
    """Test suite for s_p as the truncation depth grows."""

    def test_sp_non_decreasing_in_depth(self):
        """Test s_3 estimates at K = 1, 2, 3."""
        # Act
        values = [estimate_sp(3.0, None, depth=k, restarts=8).lower_bound for k in (1, 2, 3)]

        # Assert
        for smaller, larger in zip(values, values[1:]):
            assert larger >= smaller - 1e-6


class TestMartingaleCandidates:
    """Test suite for the martingale-transform candidates of m_p."""

    def test_level_signs(self):
        """Test the all-plus and depth-alternating sequences."""
        # Act
        candidates = dict(martingale_level_signs(2))

        # Assert
        assert candidates == {
            "martingale_all_plus": [1, 1, 1],
            "martingale_depth_alternating": [1, -1, 1],
        }

    def test_matches_T_alpha(self):
        """Test the martingale transform matrix equals T_alpha with depth-constant signs."""
        # Act
        martingale = materialize("martingale_transform", depth=2, level_signs=[1, -1, 1])
        talpha = materialize("T_alpha", depth=2, alpha=structured_patterns(2)[1][1])

        # Assert
        np.testing.assert_array_equal(martingale.matrix, talpha.matrix)

    def test_mp_covers_martingale_candidates(self):
        """Test the m_p lower bound is at least each martingale candidate estimate."""
        # Arrange
        space = SpaceDescriptor.scalar(3.0)
        candidate, _ = norm_p_lower(
            materialize("martingale_transform", depth=2, level_signs=[1, -1, 1]),
            space,
            restarts=2,
            iterations=50,
            seed=7,
        )

        # Act
        estimate = estimate_mp_lower(3.0, None, depth=2, budget=1, seed=7, restarts=2, iterations=50)

        # Assert
        assert estimate.lower_bound >= candidate.lower_bound


@pytest.mark.slow
class TestHilbertAnchorAtFour:
    """Test suite for the scalar p = 4 Hilbert estimates on the discrete multiplier."""

    def test_grows_with_grid(self):
        """Test h_4 increases from N = 64 to N = 256 and stays below 1 + sqrt(2)."""
        # Act
        coarse = estimate_hp(4.0, 64, restarts=2)
        fine = estimate_hp(4.0, 256, restarts=2)

        # Assert
        assert coarse.lower_bound < fine.lower_bound
        assert fine.lower_bound >= 1.70
        assert fine.lower_bound < 1.0 + math.sqrt(2.0)

    def test_conjugate_exponent(self):
        """Test h_4 = h_4/3 on the skew multiplier matrix."""
        # Act
        at_four = estimate_hp(4.0, 64, restarts=2)
        at_conjugate = estimate_hp(4.0 / 3.0, 64, restarts=2)

        # Assert
        assert at_four.lower_bound == pytest.approx(at_conjugate.lower_bound, rel=1e-7)
        assert at_four.lower_bound > 1.5
