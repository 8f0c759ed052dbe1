"""
Dyadic package - Haar expansions on the unit interval and the shifts acting on them.
"""

from hilbertlab.dyadic.haar import (
    HaarExpansion,
    haar_eval,
    depth_scales,
    analyze,
    synthesize,
    interval_averages,
    martingale_differences,
    cell_midpoints,
    inner_product_oracle,
)
from hilbertlab.dyadic.operators import (
    apply_S0,
    apply_Talpha,
    apply_martingale_transform,
    apply_classical_shift,
    reduce_tilde,
    dyadic_pairing,
    lp_norm,
    alpha_from_levels,
    alpha_from_array,
)

__all__ = [
    "HaarExpansion",
    "haar_eval",
    "depth_scales",
    "analyze",
    "synthesize",
    "interval_averages",
    "martingale_differences",
    "cell_midpoints",
    "inner_product_oracle",
    "apply_S0",
    "apply_Talpha",
    "apply_martingale_transform",
    "apply_classical_shift",
    "reduce_tilde",
    "dyadic_pairing",
    "lp_norm",
    "alpha_from_levels",
    "alpha_from_array",
]
