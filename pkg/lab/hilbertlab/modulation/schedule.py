"""
Spectrum bookkeeping and the modulation schedule n_0 = 1, n_{k+1} = 2 n_k N_k.
"""

from typing import Sequence, Tuple, Union
import logging

import numpy as np

from hilbertlab.exceptions import BudgetError, MalformedInputError
from hilbertlab.modulation.trig import ExpandedToss, expand_toss_function
from hilbertlab.schemas.modulation import MAX_FREQUENCY, ModulationSchedule
from hilbertlab.toss.lift import TossFunction

logger = logging.getLogger(__name__)


def spectrum_bounds(
    F: Union[ExpandedToss, TossFunction], order: Union[int, Sequence[int], None] = None
) -> Tuple[int, ...]:
    """
    N_k = max(1, B_0 + ... + B_k) for k = 0..K-1, B_j = max |l_j| over all stored terms.

    A toss function is expanded at `order` first.
    """
    expanded = F if isinstance(F, ExpandedToss) else expand_toss_function(F, order)
    per_variable = np.zeros(expanded.depth + 1, dtype=np.int64)
    for _, polynomial in expanded.terms():
        spectrum = polynomial.spectrum()
        width = spectrum.shape[0]
        per_variable[:width] = np.maximum(per_variable[:width], spectrum)
    cumulative = np.cumsum(per_variable)[: expanded.depth]
    return tuple(max(1, int(b)) for b in cumulative)


def build_schedule(N: Sequence[int]) -> ModulationSchedule:
    """
    The exact recursion in Python integers.

    Raises:
        MalformedInputError: If some N_k < 1
        BudgetError: If a frequency exceeds MAX_FREQUENCY
    """
    bounds = tuple(int(b) for b in N)
    if any(b < 1 for b in bounds):
        raise MalformedInputError("all N_k must be >= 1", {"N": list(bounds)})
    n = [1]
    for k, bound in enumerate(bounds):
        nxt = 2 * n[-1] * bound
        if nxt > MAX_FREQUENCY:
            raise BudgetError(
                "modulation frequencies overflow the integer budget",
                {"level": k + 1, "n": nxt, "max": MAX_FREQUENCY},
            )
        n.append(nxt)
    logger.debug(f"Schedule N={bounds} n={tuple(n)}")
    return ModulationSchedule(N=bounds, n=tuple(n))


def check_dominance(expanded: ExpandedToss, schedule: ModulationSchedule) -> bool:
    """|l_0 n_0 + ... + l_k n_k| < |l_{k+1} n_{k+1}| for every stored multi-index."""
    for _, polynomial in expanded.terms():
        if polynomial.n_terms == 0:
            continue
        n = np.asarray(schedule.frequencies(polynomial.n_vars), dtype=np.int64)
        head = np.abs(polynomial.indices[:, :-1] @ n[:-1])
        last = np.abs(polynomial.indices[:, -1] * n[-1])
        if np.any(head >= last):
            return False
    return True
