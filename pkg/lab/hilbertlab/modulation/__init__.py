"""
Modulation package - truncated expansions, the schedule (N_k, n_k) and the
modulation identity.
"""

from hilbertlab.modulation.trig import (
    TrigPolynomial,
    PsiPolynomial,
    ExpandedToss,
    quarter_coefficients,
    phi_coefficients,
    prefix_frequencies,
    last_frequencies,
    expand_toss_function,
    modulate,
    hilbert_in_psi,
)
from hilbertlab.modulation.schedule import spectrum_bounds, build_schedule, check_dominance
from hilbertlab.modulation.identity import (
    DEFAULT_PSIS,
    theta_grid,
    verify_modulation_identity,
    modulated_pairing,
    lemma_chain,
)

__all__ = [
    "TrigPolynomial",
    "PsiPolynomial",
    "ExpandedToss",
    "quarter_coefficients",
    "phi_coefficients",
    "prefix_frequencies",
    "last_frequencies",
    "expand_toss_function",
    "modulate",
    "hilbert_in_psi",
    "spectrum_bounds",
    "build_schedule",
    "check_dominance",
    "DEFAULT_PSIS",
    "theta_grid",
    "verify_modulation_identity",
    "modulated_pairing",
    "lemma_chain",
]
