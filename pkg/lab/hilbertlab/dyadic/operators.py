"""
Haar shift operators on truncated expansions.

All operators act row-wise on the (2^(K+1), d) coefficient table of a
HaarExpansion (row 0 mean, row 2^k + m the coefficient of h_(k, m)). A minus
child sits in an even row and its plus sibling in the following odd row.
"""

import math
from typing import Mapping, Sequence, Union
import logging

import numpy as np

from hilbertlab.dyadic.haar import HaarExpansion, synthesize
from hilbertlab.exceptions import MalformedInputError
from hilbertlab.schemas.dyadic import DyadicInterval, intervals_up_to
from hilbertlab.schemas.space import SpaceDescriptor

logger = logging.getLogger(__name__)

SQRT_HALF = 1.0 / math.sqrt(2.0)


def apply_S0(expansion: HaarExpansion) -> HaarExpansion:
    """
    Dyadic Hilbert transform S0: h_{I+} -> h_{I-}, h_{I-} -> -h_{I+}.

    The mean and the h_{I0} coefficient are annihilated.
    """
    table = expansion.table
    out = np.zeros_like(table)
    out[2::2] = table[3::2]
    out[3::2] = -table[2::2]
    return expansion.with_table(out)


def alpha_from_levels(depth: int, level_signs: Sequence[int]) -> dict:
    """Sign map alpha_I = level_signs[depth(I)] on every interval of depth <= K."""
    if len(level_signs) != depth + 1:
        raise MalformedInputError(
            "one sign per depth is required", {"depth": depth, "signs": len(level_signs)}
        )
    return {interval: level_signs[interval.depth] for interval in intervals_up_to(depth)}


def alpha_from_array(depth: int, signs: np.ndarray) -> dict:
    """Sign map from an array in heap order (entry j belongs to heap index j + 1)."""
    signs = np.asarray(signs)
    if signs.shape != ((1 << (depth + 1)) - 1,):
        raise MalformedInputError("sign array has the wrong length", {"shape": signs.shape})
    return {
        interval: int(signs[interval.heap_index - 1]) for interval in intervals_up_to(depth)
    }


def _alpha_column(alpha: Mapping[DyadicInterval, int], depth: int) -> np.ndarray:
    column = np.zeros(1 << (depth + 1))
    missing = []
    for interval in intervals_up_to(depth):
        sign = alpha.get(interval)
        if sign is None:
            missing.append(str(interval))
            continue
        if sign not in (1, -1):
            raise MalformedInputError("alpha values must be +1 or -1", {"interval": str(interval)})
        column[interval.heap_index] = sign
    if missing:
        raise MalformedInputError(
            "alpha is undefined on some intervals",
            {"missing": len(missing), "first": missing[0]},
        )
    return column


def apply_Talpha(alpha: Mapping[DyadicInterval, int], expansion: HaarExpansion) -> HaarExpansion:
    """
    Martingale transform T_alpha: mean -> 0, h_I -> alpha_I h_I.

    Args:
        alpha: Map from every interval of depth <= K to +1 or -1
        expansion: Expansion of depth K

    Raises:
        MalformedInputError: If some alpha_I is missing or not a sign
    """
    column = _alpha_column(alpha, expansion.depth)
    return expansion.with_table(expansion.table * column[:, None])


def apply_martingale_transform(level_signs: Sequence[int], expansion: HaarExpansion) -> HaarExpansion:
    """Level-wise transform sum_k a_k Delta_k: T_alpha with alpha constant on each depth."""
    return apply_Talpha(alpha_from_levels(expansion.depth, level_signs), expansion)


def apply_classical_shift(expansion: HaarExpansion) -> HaarExpansion:
    """
    Classical Haar shift h_I -> 2^(-1/2) (h_{I-} - h_{I+}).

    Coefficients on depth-K intervals would land below the truncation and are
    dropped; the mean is annihilated.
    """
    table = expansion.table
    n = table.shape[0]
    out = np.zeros_like(table)
    parents = table[1: n // 2]
    out[2::2] = SQRT_HALF * parents
    out[3::2] = -SQRT_HALF * parents
    return expansion.with_table(out)


def reduce_tilde(expansion: HaarExpansion) -> HaarExpansion:
    """f - (f, h_I0) h_I0 - <f>_I0."""
    table = np.array(expansion.table)
    table[:2] = 0.0
    return expansion.with_table(table)


def dyadic_pairing(f: HaarExpansion, g: HaarExpansion) -> float:
    """<f, g> in L^2 of the unit interval, summed over coefficients (Parseval)."""
    if f.table.shape != g.table.shape:
        raise MalformedInputError(
            "pairing needs equal depth and dimension",
            {"f": f.table.shape, "g": g.table.shape},
        )
    return float(np.sum(f.table * g.table))


def lp_norm(expansion: HaarExpansion, space: Union[SpaceDescriptor, float]) -> float:
    """
    (sum_cells |cell| |f(cell)|_X^p)^(1/p) of the synthesized step function.

    Args:
        expansion: Expansion of any depth
        space: Target space, or a bare exponent p for scalar expansions

    Raises:
        MalformedInputError: p <= 1 or the space dimension differs from the expansion
    """
    if not isinstance(space, SpaceDescriptor):
        p = float(space)
        if not 1.0 < p < math.inf:
            raise MalformedInputError("p must lie in (1, inf)", {"p": p})
        if expansion.dim != 1:
            raise MalformedInputError("a bare exponent only describes scalar functions", {"dim": expansion.dim})
        space = SpaceDescriptor.scalar(p)
    if space.dim != expansion.dim:
        raise MalformedInputError(
            "space dimension differs from the expansion",
            {"space": space.dim, "expansion": expansion.dim},
        )
    return space.norm(synthesize(expansion))
