"""
Report schemas returned by the verification and estimation routines.

Reports are plain pydantic records so experiments can flatten them into
result rows without knowing where they came from.
"""

from typing import Dict, Optional

from pydantic import Field

from hilbertlab.schemas.base import LabBaseModel
from hilbertlab.schemas.modulation import ModulationSchedule


class C0Estimate(LabBaseModel):
    """The constant c0 computed two independent ways."""
    value: float = Field(..., description="Series value, the reported c0")
    quadrature: float = Field(..., description="Average of H phi+ over [0, pi/2) by quadrature")
    quadrature_error: float = Field(..., description="Error estimate returned by the integrator")
    series: float = Field(..., description="(8/pi^2) sum (-1)^k/(2k+1)^2")
    series_terms: int
    difference: float


class DistributionReport(LabBaseModel):
    """Grid law of f against the quarter-state law of its lift."""
    equal: bool
    depth: int
    n_cells: int
    n_states: int
    distinct_values: int
    mismatched_values: int = 0
    synthesis_deviation: float = Field(
        0.0, description="max |path-summed cell value - synthesize()|, round-off only"
    )


class WeakFormReport(LabBaseModel):
    """E<F^H, G> against c0 E<S0 F, G>."""
    lhs: float = Field(..., description="E<F^H, G> from quadrature pairing moments")
    rhs: float = Field(..., description="E<S0 F, G> by enumeration")
    c0: float
    residual: float = Field(..., description="|lhs - c0 * rhs|")
    projected_lhs: float = Field(..., description="E<F^H, G> with H phi replaced by quarter averages")
    route_residual: float = Field(..., description="|lhs - projected_lhs|")
    dyadic_pairing: Optional[float] = Field(None, description="<S0 f, g> on the unit interval")
    holder_envelope: Optional[float] = Field(None, description="h_p |F|_p |G|_p' when h_p is supplied")


class ModulationReport(LabBaseModel):
    """Both sides of the modulation identity on truncated series."""
    max_residual: float
    level_residuals: Dict[str, float]
    order: int
    n_terms: int
    schedule: ModulationSchedule
    dominance_ok: bool


class LemmaChainReport(LabBaseModel):
    """E<F^H,G>, E_psi E<Phi^H,Gamma> and E_psi E<H_psi Phi,Gamma> on truncated series."""
    truncated_pairing: float
    modulated_pairing: float
    psi_hilbert_pairing: float
    max_spread: float


class NormEstimate(LabBaseModel):
    """A certified lower bound on an Lp operator norm."""
    operator: str
    p: float
    space: str
    lower_bound: float
    restarts: int
    iterations: int = Field(..., description="Iterations used by the winning restart")
    converged: bool
    best_start: str
    direction: str = Field(..., description="'primal' (T, p) or 'dual' (T^t, p')")


class ComparisonRow(LabBaseModel):
    """One (p, space) row of the s_p against h_p comparison."""
    p: float
    space: str
    depth: int
    grid: int
    s_p_lower: float
    h_p_lower: float
    ratio: float
    c0: float
    inv_c0: float
    three_over_c0: float
    slack: float
    within_bound: bool = Field(..., description="ratio <= slack / c0")
    m_p_lower: Optional[float] = None
