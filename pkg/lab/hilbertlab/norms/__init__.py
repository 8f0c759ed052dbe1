"""
Norms package - operator matrices and Lp norm lower bounds.
"""

from hilbertlab.norms.operators import (
    OperatorMatrix,
    OperatorFactory,
    materialize,
    hilbert_matrix,
    haar_operator_matrix,
    norm_2_exact,
    singular_values,
)
from hilbertlab.norms.power import (
    PowerResult,
    duality_map,
    power_iteration,
    random_starts,
    top_singular_start,
    hilbert_starts,
    norm_p_lower,
)
from hilbertlab.norms.estimates import (
    estimate_hp,
    estimate_sp,
    estimate_mp_lower,
    sign_patterns,
    structured_patterns,
    comparison_experiment,
)

__all__ = [
    "OperatorMatrix",
    "OperatorFactory",
    "materialize",
    "hilbert_matrix",
    "haar_operator_matrix",
    "norm_2_exact",
    "singular_values",
    "PowerResult",
    "duality_map",
    "power_iteration",
    "random_starts",
    "top_singular_start",
    "hilbert_starts",
    "norm_p_lower",
    "estimate_hp",
    "estimate_sp",
    "estimate_mp_lower",
    "sign_patterns",
    "structured_patterns",
    "comparison_experiment",
]
