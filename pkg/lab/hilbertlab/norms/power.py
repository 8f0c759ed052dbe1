"""
Nonlinear power method for lower bounds on ||T||_{L^p_X -> L^p_X}.

With the norming map J_p of L^p_X (uniform cell weights), one step is

    y = T x,   z = T^t J_p(y),   x <- J_p'(z)

and ||T x|| never decreases. Each run is done on (T, p) and on (T^t, p')
from the same starts; the larger certified value is reported.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import logging
import math

import numpy as np
from tqdm import tqdm

from hilbertlab.core.config import settings
from hilbertlab.exceptions import InternalConsistencyError, MalformedInputError, NumericalError, PreconditionError
from hilbertlab.norms.operators import OperatorMatrix
from hilbertlab.schemas.reports import NormEstimate
from hilbertlab.schemas.space import SpaceDescriptor

logger = logging.getLogger(__name__)

HILBERT_START_EXPONENTS = (0.5, 0.7, 0.85, 0.95)


def _check_space(space: SpaceDescriptor) -> None:
    if space.q is not None and (space.q == 1.0 or math.isinf(space.q)):
        raise PreconditionError(
            "duality maps need an inner exponent q in (1, inf)", {"space": space.label}
        )


def duality_map(values: np.ndarray, space: SpaceDescriptor) -> np.ndarray:
    """
    The norming functional of u in L^{p'}_{X*}: <J(u), u> = ||u||, ||J(u)|| = 1.

    J(u)_{c,i} = sgn(u_ci) |u_ci|^(q-1) |u_c|_q^(p-q) / ||u||^(p-1); zero where u_c = 0.

    Args:
        values: Cell values, shape (n, d)
    """
    u = np.asarray(values, dtype=float)
    norm = space.norm(u)
    if norm == 0.0:
        return np.zeros_like(u)
    p = space.p
    if space.is_scalar:
        return np.sign(u) * np.abs(u) ** (p - 1.0) / norm ** (p - 1.0)
    q = space.q
    pointwise = space.pointwise_norm(u)
    with np.errstate(divide="ignore", invalid="ignore"):
        scale = np.where(pointwise > 0.0, pointwise ** (p - q), 0.0)
    return np.sign(u) * np.abs(u) ** (q - 1.0) * scale[:, None] / norm ** (p - 1.0)


@dataclass
class PowerResult:
    """Outcome of one power-method run."""

    value: float
    vector: np.ndarray
    iterations: int
    converged: bool
    start: str
    direction: str


def power_iteration(
    matrix: np.ndarray,
    space: SpaceDescriptor,
    start: np.ndarray,
    iterations: int,
    tol: float,
    label: str = "start",
    direction: str = "primal",
) -> PowerResult:
    """
    Run the alternating duality ascent from one start.

    Raises:
        NumericalError: If an iterate becomes non-finite
        InternalConsistencyError: If the objective decreases beyond MONOTONE_SLACK
    """
    n_cells = matrix.shape[0] // space.dim
    dual = space.dual()
    transpose = matrix.T

    def cells(vector):
        return vector.reshape(n_cells, space.dim)

    start_norm = space.norm(cells(start))
    if start_norm == 0.0 or not math.isfinite(start_norm):
        raise NumericalError("start vector has no finite nonzero norm", {"start": label})
    x = start / start_norm
    value = space.norm(cells(matrix @ x))
    converged = False
    used = 0
    for used in range(1, iterations + 1):
        y = matrix @ x
        z = transpose @ duality_map(cells(y), space).reshape(-1)
        if not np.all(np.isfinite(z)):
            raise NumericalError("power iteration produced non-finite values", {"start": label, "iteration": used})
        if not np.any(z):
            value = 0.0
            converged = True
            break
        x = duality_map(cells(z), dual).reshape(-1)
        new_value = space.norm(cells(matrix @ x))
        if not math.isfinite(new_value):
            raise NumericalError("objective is not finite", {"start": label, "iteration": used})
        if new_value < value - settings.MONOTONE_SLACK * max(1.0, value):
            raise InternalConsistencyError(
                "power iteration objective decreased",
                {"start": label, "iteration": used, "before": value, "after": new_value},
            )
        gain = new_value - value
        value = max(value, new_value)
        if gain <= tol * max(1.0, value):
            converged = True
            break
    return PowerResult(value, cells(x).copy(), used, converged, label, direction)


def random_starts(size: int, restarts: int, seed: int) -> List[Tuple[str, np.ndarray]]:
    """Seeded Gaussian starts plus one random sign pattern, one child seed each."""
    children = np.random.SeedSequence(seed).spawn(restarts + 1)
    starts = [
        (f"random_{i}", np.random.default_rng(child).standard_normal(size))
        for i, child in enumerate(children[:restarts])
    ]
    signs = np.random.default_rng(children[-1]).choice([-1.0, 1.0], size=size)
    starts.append(("random_signs", signs))
    return starts


def top_singular_start(matrix: np.ndarray) -> np.ndarray:
    """Leading eigenvector of m^t m, the p = 2 maximizer."""
    _, vectors = np.linalg.eigh(matrix.T @ matrix)
    return np.ascontiguousarray(vectors[:, -1])


def hilbert_starts(grid: int, dim: int, exponent: float, conjugate: float) -> List[Tuple[str, np.ndarray]]:
    """
    |cot(theta/2)|^a near-extremals of the circle Hilbert transform.

    a = c / max(p, p') for c in HILBERT_START_EXPONENTS; multiplied by
    sign(sin theta) when the run exponent exceeds 2. A square wave is added.
    """
    theta = 2.0 * math.pi * (np.arange(grid) + 0.5) / grid
    cot = np.abs(1.0 / np.tan(theta / 2.0))
    odd = np.sign(np.sin(theta))
    largest = max(exponent, conjugate)
    starts = []
    for c in HILBERT_START_EXPONENTS:
        profile = cot ** (c / largest)
        if exponent > 2.0:
            profile = profile * odd
        starts.append((f"cot_power_{c:g}", np.repeat(profile, dim)))
    starts.append(("square_wave", np.repeat(odd, dim)))
    return starts


def _run(job) -> PowerResult:
    matrix, space, (label, start), iterations, tol, direction = job
    return power_iteration(matrix, space, start, iterations, tol, label, direction)


def norm_p_lower(
    op: OperatorMatrix,
    space: SpaceDescriptor,
    restarts: Optional[int] = None,
    iterations: Optional[int] = None,
    tol: Optional[float] = None,
    seed: Optional[int] = None,
    progress: bool = False,
) -> Tuple[NormEstimate, np.ndarray]:
    """
    Certified lower bound on ||op||_{p -> p} over L^p_X.

    Args:
        op: Materialized operator; its dim must match the space
        space: L^p_X with X scalar or l_q^d, q in (1, inf)
        restarts: Seeded random starts, 0 allowed (structured starts are added)
        iterations: Iteration cap per run
        tol: Stop once the objective gains less than tol (relative)
        seed: Root seed for the per-restart child seeds
        progress: Show a tqdm bar over the runs

    Returns:
        (estimate, maximizer as (n_cells, d) cell values)

    Raises:
        PreconditionError: If q is 1 or inf
        MalformedInputError: If restarts < 0 or iterations < 1
        NumericalError / InternalConsistencyError: From the runs
    """
    _check_space(space)
    if op.dim != space.dim:
        raise PreconditionError("operator and space dimensions differ", {"operator": op.dim, "space": space.dim})
    restarts = settings.POWER_RESTARTS if restarts is None else restarts
    iterations = settings.POWER_ITERATIONS if iterations is None else iterations
    if restarts < 0 or iterations < 1:
        raise MalformedInputError(
            "restarts must be >= 0 and iterations >= 1", {"restarts": restarts, "iterations": iterations}
        )
    tol = tol if tol is not None else settings.POWER_TOL
    seed = settings.DEFAULT_SEED if seed is None else seed

    starts = random_starts(op.size, restarts, seed)
    starts.append(("top_singular", top_singular_start(op.matrix)))
    if op.name == "hilbert":
        starts.extend(hilbert_starts(op.n_cells, op.dim, space.p, space.p_dual))
        dual_starts = starts[: restarts + 2] + hilbert_starts(op.n_cells, op.dim, space.p_dual, space.p)
    else:
        dual_starts = starts

    transpose = op.transpose().matrix
    jobs = [(op.matrix, space, start, iterations, tol, "primal") for start in starts]
    jobs += [(transpose, space.dual(), start, iterations, tol, "dual") for start in dual_starts]

    if settings.WORKERS > 1:
        with ThreadPoolExecutor(max_workers=settings.WORKERS) as pool:
            results = list(tqdm(pool.map(_run, jobs), total=len(jobs), disable=not progress, desc=op.name))
    else:
        results = [_run(job) for job in tqdm(jobs, disable=not progress, desc=op.name)]

    best = results[0]
    for result in results[1:]:
        if result.value > best.value:
            best = result
    logger.debug(
        f"{op.name} on {space.label} p={space.p:g}: {best.value:.10f} "
        f"({best.direction}, {best.start}, {best.iterations} iterations)"
    )
    estimate = NormEstimate(
        operator=op.name,
        p=space.p,
        space=space.label,
        lower_bound=best.value,
        restarts=len(jobs),
        iterations=best.iterations,
        converged=best.converged,
        best_start=best.start,
        direction=best.direction,
    )
    return estimate, best.vector
