"""
Circle package - square waves, the Hilbert transform on the torus, quarter
projections and the constant c0.
"""

from hilbertlab.circle.functions import (
    HALF_PI,
    QUARTER_LABELS,
    QUARTER_PANELS,
    QUARTER_STARTS,
    PHI_SIGNS,
    NAMED_FUNCTIONS,
    CircleFunction,
    ClosedFormFunction,
    wrap_angle,
    quarter_index,
    phi,
    chi_arc,
    eval_g,
    eval_H_phi,
    closed_form,
    quarter_step_function,
    probe_grid,
)
from hilbertlab.circle.hilbert import (
    SpectralFunction,
    hilbert_multiplier,
    hilbert_symbol,
    arc_coefficients,
    square_wave_coefficients,
    sup_distance,
)
from hilbertlab.circle.quadrature import (
    integrate_panel,
    project_quarters,
    circle_mean,
    circle_pairing,
    quarter_pairing,
    catalan_series,
    compute_c0,
    compute_c0_estimate,
    quarter_averages_of_H_phi,
    pairing_moment,
)

__all__ = [
    "HALF_PI",
    "QUARTER_LABELS",
    "QUARTER_PANELS",
    "QUARTER_STARTS",
    "PHI_SIGNS",
    "NAMED_FUNCTIONS",
    "CircleFunction",
    "ClosedFormFunction",
    "wrap_angle",
    "quarter_index",
    "phi",
    "chi_arc",
    "eval_g",
    "eval_H_phi",
    "closed_form",
    "quarter_step_function",
    "probe_grid",
    "SpectralFunction",
    "hilbert_multiplier",
    "hilbert_symbol",
    "arc_coefficients",
    "square_wave_coefficients",
    "sup_distance",
    "integrate_panel",
    "project_quarters",
    "circle_mean",
    "circle_pairing",
    "quarter_pairing",
    "catalan_series",
    "compute_c0",
    "compute_c0_estimate",
    "quarter_averages_of_H_phi",
    "pairing_moment",
]
