"""
Numerical checks of the modulation identity and the psi-averaging chain.

On truncated series the identity

    H_psi( dF(theta + n psi) phi(theta_{k+1} + n_{k+1} psi) )
        = dF(theta + n psi) (H phi)(theta_{k+1} + n_{k+1} psi)

is exact once the last frequency dominates, so residuals measure round-off
only. Expectations in theta use a uniform grid of P >= 2M + 1 points per
variable, exact for the products of two truncated series.
"""

from typing import Optional, Sequence, Union
import logging

import numpy as np

from hilbertlab.dyadic.haar import HaarExpansion
from hilbertlab.exceptions import MalformedInputError
from hilbertlab.modulation.schedule import build_schedule, check_dominance, spectrum_bounds
from hilbertlab.modulation.trig import (
    ExpandedToss,
    expand_toss_function,
    hilbert_in_psi,
    modulate,
)
from hilbertlab.schemas.modulation import ModulationSchedule
from hilbertlab.schemas.reports import LemmaChainReport, ModulationReport
from hilbertlab.toss.lift import TossFunction, lift

logger = logging.getLogger(__name__)

DEFAULT_PSIS = (0.0, 0.3, 1.7)

Order = Union[int, Sequence[int], None]


def theta_grid(n_vars: int, points: int) -> np.ndarray:
    """
    Tensor grid of `points` uniform angles per variable.

    Returns:
        Array of shape (points^n_vars, n_vars)
    """
    axis = -np.pi + 2.0 * np.pi * np.arange(points) / points
    mesh = np.meshgrid(*([axis] * n_vars), indexing="ij")
    return np.stack([m.reshape(-1) for m in mesh], axis=1)


def _grid_points(expanded: ExpandedToss) -> int:
    return 2 * max(expanded.orders) + 1


def _as_toss(f: Union[HaarExpansion, TossFunction]) -> TossFunction:
    return lift(f) if isinstance(f, HaarExpansion) else f


def verify_modulation_identity(
    f: Union[HaarExpansion, TossFunction],
    order: Order,
    thetas: np.ndarray,
    psis: Sequence[float],
    schedule: Optional[ModulationSchedule] = None,
) -> ModulationReport:
    """
    Compare H_psi after modulation with modulation after H in the last variable.

    Args:
        f: Expansion (lifted first) or toss function
        order: Truncation order M, or one per variable
        thetas: Probe angle vectors, shape (n, K+1)
        psis: Probe values of psi
        schedule: Defaults to the minimal schedule for the truncation

    Raises:
        ScheduleTooSmallError: If the schedule breaks frequency dominance
    """
    F = _as_toss(f)
    expanded = expand_toss_function(F, order)
    schedule = schedule or build_schedule(spectrum_bounds(expanded))
    thetas = np.atleast_2d(np.asarray(thetas, dtype=float))
    if thetas.shape[1] != F.depth + 1:
        raise MalformedInputError("one probe angle per toss variable is required", {"shape": thetas.shape})

    residuals = {}
    for label, polynomial in expanded.terms():
        worst = 0.0
        shifted = polynomial.hilbert_last()
        for theta in thetas:
            lhs = hilbert_in_psi(modulate(polynomial, schedule, theta))
            rhs = modulate(shifted, schedule, theta)
            worst = max(worst, float(np.max(np.abs(lhs.evaluate(psis) - rhs.evaluate(psis)), initial=0.0)))
        residuals[label] = worst

    report = ModulationReport(
        max_residual=max(residuals.values()),
        level_residuals=residuals,
        order=max(expanded.orders),
        n_terms=expanded.n_terms,
        schedule=schedule,
        dominance_ok=check_dominance(expanded, schedule),
    )
    logger.debug(f"Modulation identity at depth {F.depth}: max residual {report.max_residual:.2e}")
    return report


def _pairing_on_grid(left: ExpandedToss, right: ExpandedToss, thetas: np.ndarray) -> float:
    values = np.sum(left.evaluate(thetas) * right.evaluate(thetas), axis=1)
    return float(np.mean(values))


def modulated_pairing(
    F: TossFunction,
    G: TossFunction,
    order: Order,
    schedule: ModulationSchedule,
    psi: float,
) -> float:
    """E^theta <Phi^H(psi), Gamma(psi)> with Phi(psi) = F(theta + n psi), truncated."""
    F_expanded = expand_toss_function(F, order)
    G_expanded = expand_toss_function(G, order)
    grid = theta_grid(F.depth + 1, _grid_points(F_expanded))
    shift = np.asarray(schedule.frequencies(F.depth + 1), dtype=float) * psi
    return _pairing_on_grid(F_expanded.hilbert_last(), G_expanded, grid + shift)


def lemma_chain(
    F: TossFunction,
    G: TossFunction,
    order: Order = None,
    schedule: Optional[ModulationSchedule] = None,
    psis: Sequence[float] = DEFAULT_PSIS,
) -> LemmaChainReport:
    """
    E^theta <F^H, G>, E^theta <Phi^H(psi), Gamma(psi)> and E^psi E^theta <H_psi Phi, Gamma>.

    All three agree on truncated series; max_spread covers every psi probe.
    """
    if F.depth != G.depth or F.dim != G.dim:
        raise MalformedInputError("toss functions must share depth and dimension")
    F_expanded = expand_toss_function(F, order)
    G_expanded = expand_toss_function(G, order)
    schedule = schedule or build_schedule(spectrum_bounds(F_expanded))
    grid = theta_grid(F.depth + 1, _grid_points(F_expanded))

    truncated = _pairing_on_grid(F_expanded.hilbert_last(), G_expanded, grid)
    modulated = [modulated_pairing(F, G, order, schedule, psi) for psi in psis]

    total = 0.0
    for theta in grid:
        phi_h = hilbert_in_psi(F_expanded.modulate(schedule, theta))
        gamma = G_expanded.modulate(schedule, theta, check=False)
        total += phi_h.pair_mean(gamma)
    psi_hilbert = total / grid.shape[0]

    values = [truncated, psi_hilbert, *modulated]
    report = LemmaChainReport(
        truncated_pairing=truncated,
        modulated_pairing=modulated[0] if modulated else truncated,
        psi_hilbert_pairing=psi_hilbert,
        max_spread=max(values) - min(values),
    )
    logger.debug(f"Psi-averaging chain: spread {report.max_spread:.2e}")
    return report
