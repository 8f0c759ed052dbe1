"""
Toss package - the sign-toss lift, exact enumeration and the weak form of S0.
"""

from hilbertlab.toss.quarters import (
    QuarterState,
    check_enumeration_budget,
    n_states,
    enumerate_states,
    prefix_codes,
    toss_table,
)
from hilbertlab.toss.lift import (
    TossFunction,
    interval_to_path,
    path_to_interval,
    prefix_positions,
    lift,
    scaled_coefficients,
    random_toss_function,
    apply_S0_toss,
    grid_path_values,
    value_law,
    laws_equal,
    distribution_check,
    toss_lp_norm,
)
from hilbertlab.toss.pairing import (
    HilbertIncrements,
    expect_pairing,
    apply_H_increments,
    weak_form_check,
    weak_form_check_toss,
)

__all__ = [
    "QuarterState",
    "check_enumeration_budget",
    "n_states",
    "enumerate_states",
    "prefix_codes",
    "toss_table",
    "TossFunction",
    "interval_to_path",
    "path_to_interval",
    "prefix_positions",
    "lift",
    "scaled_coefficients",
    "random_toss_function",
    "apply_S0_toss",
    "grid_path_values",
    "value_law",
    "laws_equal",
    "distribution_check",
    "toss_lp_norm",
    "HilbertIncrements",
    "expect_pairing",
    "apply_H_increments",
    "weak_form_check",
    "weak_form_check_toss",
]
