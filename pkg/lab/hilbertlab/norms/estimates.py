"""
Norm estimates for the circle Hilbert transform, S0 and martingale transforms,
and the s_p against h_p comparison.

All values are certified lower bounds at the given truncation.
"""

from itertools import product
from typing import Iterator, List, Optional, Tuple
import logging

import numpy as np
from tqdm import tqdm

from hilbertlab.circle.quadrature import compute_c0
from hilbertlab.core.config import settings
from hilbertlab.norms.operators import materialize
from hilbertlab.norms.power import norm_p_lower
from hilbertlab.schemas.dyadic import intervals_up_to
from hilbertlab.schemas.experiment import ExperimentConfig
from hilbertlab.schemas.reports import ComparisonRow, NormEstimate
from hilbertlab.schemas.space import SpaceDescriptor

logger = logging.getLogger(__name__)


def estimate_hp(
    p: float,
    grid: int,
    restarts: Optional[int] = None,
    seed: Optional[int] = None,
    space: Optional[SpaceDescriptor] = None,
    iterations: Optional[int] = None,
    progress: bool = False,
) -> NormEstimate:
    """h_p lower bound from the discrete multiplier -i sgn(n) on N grid points."""
    space = space.with_p(p) if space is not None else SpaceDescriptor.scalar(p)
    op = materialize("hilbert", space=space, grid=grid)
    estimate, _ = norm_p_lower(op, space, restarts=restarts, iterations=iterations, seed=seed, progress=progress)
    return estimate


def estimate_sp(
    p: float,
    space: Optional[SpaceDescriptor],
    depth: int,
    restarts: Optional[int] = None,
    seed: Optional[int] = None,
    iterations: Optional[int] = None,
    progress: bool = False,
) -> NormEstimate:
    """s_p lower bound from S0 materialized at depth K."""
    space = space.with_p(p) if space is not None else SpaceDescriptor.scalar(p)
    op = materialize("S0", depth=depth, space=space)
    estimate, _ = norm_p_lower(op, space, restarts=restarts, iterations=iterations, seed=seed, progress=progress)
    return estimate


def structured_patterns(depth: int) -> List[Tuple[str, np.ndarray]]:
    """All +1, alternating by depth, alternating by position (heap order)."""
    intervals = list(intervals_up_to(depth))
    return [
        ("all_plus", np.ones(len(intervals))),
        ("depth_alternating", np.array([(-1.0) ** i.depth for i in intervals])),
        ("position_alternating", np.array([(-1.0) ** i.position for i in intervals])),
    ]


def sign_patterns(depth: int, budget: int, seed: int) -> Iterator[Tuple[str, np.ndarray]]:
    """
    Exhaustive when 2^(#intervals) <= budget, else structured plus seeded random patterns.
    """
    n_intervals = (1 << (depth + 1)) - 1
    if 2 ** n_intervals <= budget:
        for bits in product((1.0, -1.0), repeat=n_intervals):
            yield "exhaustive", np.array(bits)
        return
    structured = structured_patterns(depth)
    yield from structured
    rng = np.random.default_rng(seed)
    for i in range(max(0, budget - len(structured))):
        yield f"random_{i}", rng.choice([-1.0, 1.0], size=n_intervals)


def martingale_level_signs(depth: int) -> List[Tuple[str, List[int]]]:
    """Level-sign sequences a_0..a_K of the martingale-transform candidates."""
    return [
        ("martingale_all_plus", [1] * (depth + 1)),
        ("martingale_depth_alternating", [(-1) ** k for k in range(depth + 1)]),
    ]


def _mp_candidates(depth: int, space: SpaceDescriptor, budget: int, seed: int):
    for label, level_signs in martingale_level_signs(depth):
        yield label, materialize("martingale_transform", depth=depth, space=space, level_signs=level_signs)
    for label, signs in sign_patterns(depth, budget, seed):
        yield label, materialize("T_alpha", depth=depth, space=space, alpha=signs)


def estimate_mp_lower(
    p: float,
    space: Optional[SpaceDescriptor],
    depth: int,
    budget: Optional[int] = None,
    seed: Optional[int] = None,
    restarts: Optional[int] = None,
    iterations: Optional[int] = None,
) -> NormEstimate:
    """
    Max of the T_alpha estimates over martingale-transform candidates and
    sign patterns alpha: a lower bound on m_p.
    """
    space = space.with_p(p) if space is not None else SpaceDescriptor.scalar(p)
    budget = settings.UMD_BUDGET if budget is None else budget
    seed = settings.DEFAULT_SEED if seed is None else seed
    best: Optional[NormEstimate] = None
    for label, op in _mp_candidates(depth, space, budget, seed):
        estimate, _ = norm_p_lower(op, space, restarts=restarts, iterations=iterations, seed=seed)
        if best is None or estimate.lower_bound > best.lower_bound:
            best = estimate.model_copy(update={"best_start": f"{label}/{estimate.best_start}"})
    return best


def comparison_experiment(config: ExperimentConfig, progress: bool = False) -> List[ComparisonRow]:
    """
    One row per (p, space): s_p and h_p lower bounds, their ratio and the 1/c0 envelope.

    A ratio above slack/c0 is flagged, not raised.
    """
    c0 = compute_c0()
    rows = []
    cases = [(p, space) for p in config.exponents for space in config.space_descriptors(p)]
    for p, space in tqdm(cases, disable=not progress, desc="comparison"):
        s_p = estimate_sp(p, space, config.depth, config.restarts, config.seed, config.iterations)
        h_p = estimate_hp(p, config.grid, config.restarts, config.seed, space, config.iterations)
        m_p = estimate_mp_lower(p, space, config.depth, config.budget, config.seed, config.restarts, config.iterations)
        ratio = s_p.lower_bound / h_p.lower_bound
        row = ComparisonRow(
            p=p,
            space=space.label,
            depth=config.depth,
            grid=config.grid,
            s_p_lower=s_p.lower_bound,
            h_p_lower=h_p.lower_bound,
            ratio=ratio,
            c0=c0,
            inv_c0=1.0 / c0,
            three_over_c0=3.0 / c0,
            slack=config.slack,
            within_bound=ratio <= config.slack / c0,
            m_p_lower=m_p.lower_bound,
        )
        if not row.within_bound:
            logger.warning(f"⚠️ s_p/h_p = {ratio:.4f} exceeds {config.slack:g}/c0 at p={p:g}, {space.label}")
        rows.append(row)
    return rows
