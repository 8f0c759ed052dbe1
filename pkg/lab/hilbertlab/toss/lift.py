"""
Sign-toss lift of Haar expansions.

A depth-K expansion f becomes a function F of K+1 independent uniform angles:

    F = dF_-2 + dF_-1 phi+(theta_0)
        + sum_{k=0}^{K-1} dF_k^+(theta_0..theta_k) phi+(theta_{k+1})
                         + dF_k^-(theta_0..theta_k) phi-(theta_{k+1})

The toss phi+(theta_0) picks the child J_1 of I0; afterwards the parity of
J_j (plus or minus child) decides whether phi+ or phi- of theta_j picks the
next child. Level k increments live on the prefix (q_0..q_k) and equal
(f, h_J) |J|^(-1/2) for the depth-(k+1) interval J the prefix selects, stored
in the slot of J's parity.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple
import logging

import numpy as np

from hilbertlab.circle.functions import PHI_SIGNS
from hilbertlab.dyadic.haar import HaarExpansion, depth_scales, synthesize
from hilbertlab.exceptions import MalformedInputError
from hilbertlab.schemas.dyadic import DyadicInterval
from hilbertlab.schemas.reports import DistributionReport
from hilbertlab.schemas.sign import Sign
from hilbertlab.schemas.space import SpaceDescriptor
from hilbertlab.toss.quarters import (
    check_enumeration_budget,
    enumerate_states,
    n_states,
    prefix_codes,
    toss_table,
)

logger = logging.getLogger(__name__)

PLUS_SIGNS = PHI_SIGNS[Sign.PLUS]
MINUS_SIGNS = PHI_SIGNS[Sign.MINUS]


# ---------- dyadic paths ----------

def interval_to_path(interval: DyadicInterval) -> Tuple[Sign, ...]:
    """(eps_1, ..., eps_k): the child taken at each step from I0, minus = left."""
    k = interval.depth
    return tuple(
        Sign.PLUS if (interval.position >> (k - 1 - j)) & 1 else Sign.MINUS for j in range(k)
    )


def path_to_interval(path: Sequence) -> DyadicInterval:
    position = 0
    for step in path:
        position = 2 * position + (1 if Sign.parse(step) is Sign.PLUS else 0)
    return DyadicInterval(depth=len(path), position=position)


def prefix_positions(level: int) -> np.ndarray:
    """
    Position of the depth-(level+1) interval selected by every prefix (q_0..q_level).

    Returns:
        Array of length 4^(level+1), indexed by prefix code
    """
    codes = np.arange(4 ** (level + 1))
    digits = [(codes >> (2 * (level - j))) & 3 for j in range(level + 1)]
    position = (PLUS_SIGNS[digits[0]] > 0).astype(np.int64)
    for j in range(1, level + 1):
        plus_child = (position & 1) == 1
        toss = np.where(plus_child, PLUS_SIGNS[digits[j]], MINUS_SIGNS[digits[j]])
        position = 2 * position + (toss > 0)
    return position


# ---------- toss functions ----------

@dataclass(frozen=True)
class TossFunction:
    """Increments (dF_-2, dF_-1, {dF_k^+, dF_k^-}) of an R^d-valued function of tosses."""

    constant: np.ndarray  # dF_-2, shape (d,)
    root: np.ndarray  # dF_-1, coefficient of phi+(theta_0), shape (d,)
    plus: Tuple[np.ndarray, ...]  # level k: (4^(k+1), d), coefficient of phi+(theta_{k+1})
    minus: Tuple[np.ndarray, ...]  # level k: (4^(k+1), d), coefficient of phi-(theta_{k+1})

    def __post_init__(self):
        constant = np.array(self.constant, dtype=float).reshape(-1)
        root = np.array(self.root, dtype=float).reshape(-1)
        dim = constant.shape[0]
        if root.shape != (dim,) or len(self.plus) != len(self.minus):
            raise MalformedInputError("inconsistent toss function increments")
        plus, minus = [], []
        for k, (p, m) in enumerate(zip(self.plus, self.minus)):
            p = np.array(p, dtype=float).reshape(4 ** (k + 1), dim)
            m = np.array(m, dtype=float).reshape(4 ** (k + 1), dim)
            p.setflags(write=False)
            m.setflags(write=False)
            plus.append(p)
            minus.append(m)
        for array in (constant, root):
            array.setflags(write=False)
        object.__setattr__(self, "constant", constant)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "plus", tuple(plus))
        object.__setattr__(self, "minus", tuple(minus))

    @classmethod
    def zeros(cls, depth: int, dim: int = 1) -> "TossFunction":
        return cls(
            np.zeros(dim),
            np.zeros(dim),
            tuple(np.zeros((4 ** (k + 1), dim)) for k in range(depth)),
            tuple(np.zeros((4 ** (k + 1), dim)) for k in range(depth)),
        )

    @property
    def depth(self) -> int:
        """K; the function depends on theta_0..theta_K."""
        return len(self.plus)

    @property
    def dim(self) -> int:
        return self.constant.shape[0]

    def slot(self, level: int, sigma: Sign) -> np.ndarray:
        return self.plus[level] if Sign.parse(sigma) is Sign.PLUS else self.minus[level]

    def is_reduced(self) -> bool:
        """dF_-2 = dF_-1 = 0."""
        return not (np.any(self.constant != 0.0) or np.any(self.root != 0.0))

    def is_zero(self) -> bool:
        return self.is_reduced() and not any(
            np.any(s != 0.0) for s in self.plus + self.minus
        )

    def respects_parity(self) -> bool:
        """Each prefix feeds only the slot of the parity of the interval it selects."""
        for k in range(self.depth):
            plus_child = (prefix_positions(k) & 1) == 1
            if np.any(self.plus[k][~plus_child] != 0.0) or np.any(self.minus[k][plus_child] != 0.0):
                return False
        return True

    def with_increments(self, constant, root, plus, minus) -> "TossFunction":
        return TossFunction(constant, root, tuple(plus), tuple(minus))

    def reduced(self) -> "TossFunction":
        return self.with_increments(np.zeros(self.dim), np.zeros(self.dim), self.plus, self.minus)

    def evaluate_states(self) -> np.ndarray:
        """
        F on every quarter state, in enumeration order.

        Returns:
            Array of shape (4^(K+1), d)
        """
        states = enumerate_states(self.depth)
        plus_tosses = toss_table(states, Sign.PLUS)
        minus_tosses = toss_table(states, Sign.MINUS)
        values = self.constant + self.root * plus_tosses[:, 0:1]
        for k in range(self.depth):
            codes = prefix_codes(self.depth, k)
            term = (
                self.plus[k][codes] * plus_tosses[:, k + 1: k + 2]
                + self.minus[k][codes] * minus_tosses[:, k + 1: k + 2]
            )
            values = values + term
        return values

    def allclose(self, other: "TossFunction", atol: float = 1e-12) -> bool:
        if self.depth != other.depth or self.dim != other.dim:
            return False
        pairs = [(self.constant, other.constant), (self.root, other.root)]
        pairs += list(zip(self.plus + self.minus, other.plus + other.minus))
        return all(np.allclose(a, b, rtol=0.0, atol=atol) for a, b in pairs)

    def __neg__(self) -> "TossFunction":
        return self.with_increments(
            -self.constant, -self.root, [-p for p in self.plus], [-m for m in self.minus]
        )


def lift(expansion: HaarExpansion) -> TossFunction:
    """
    The sign-toss function F with the same law as f.

    dF_-2 = <f>_I0, dF_-1 = (f, h_I0), and on a prefix selecting J of depth
    k+1, dF_k^{parity(J)} = (f, h_J) |J|^(-1/2) with the other slot zero.
    """
    scaled = scaled_coefficients(expansion)
    plus, minus = [], []
    for k in range(expansion.depth):
        positions = prefix_positions(k)
        values = scaled[(1 << (k + 1)) + positions]
        plus_child = ((positions & 1) == 1)[:, None]
        plus.append(np.where(plus_child, values, 0.0))
        minus.append(np.where(plus_child, 0.0, values))
    return TossFunction(expansion.table[0], scaled[1], tuple(plus), tuple(minus))


def scaled_coefficients(expansion: HaarExpansion) -> np.ndarray:
    """(f, h_I) |I|^(-1/2) in every table row (row 0 keeps the mean)."""
    return expansion.table * depth_scales(expansion.depth)[:, None]


def random_toss_function(
    depth: int, dim: int, rng: np.random.Generator, reduced: bool = True
) -> TossFunction:
    """
    Standard normal increments with full prefix dependence in both slots.

    Unlike a lift, both generators are active on every prefix.
    """
    constant = np.zeros(dim) if reduced else rng.standard_normal(dim)
    root = np.zeros(dim) if reduced else rng.standard_normal(dim)
    plus = tuple(rng.standard_normal((4 ** (k + 1), dim)) for k in range(depth))
    minus = tuple(rng.standard_normal((4 ** (k + 1), dim)) for k in range(depth))
    return TossFunction(constant, root, plus, minus)


def apply_S0_toss(F: TossFunction) -> TossFunction:
    """
    S0 in the language of tosses: dF^+ eps^+ -> dF^+ eps^-, dF^- eps^- -> -dF^- eps^+.

    dF_-2 and dF_-1 are annihilated.
    """
    zeros = np.zeros(F.dim)
    return F.with_increments(zeros, zeros, [-m for m in F.minus], list(F.plus))


# ---------- laws ----------

def grid_path_values(expansion: HaarExpansion) -> np.ndarray:
    """
    f on the 2^(K+1) grid cells, summed level by level along each cell's path.

    Uses the same scaled coefficients and the same order of additions as
    TossFunction.evaluate_states, so the two value sets agree bit for bit.
    """
    depth = expansion.depth
    scaled = scaled_coefficients(expansion)
    cells = np.arange(1 << (depth + 1))
    signs = [np.where((cells >> (depth - j)) & 1, 1.0, -1.0)[:, None] for j in range(depth + 1)]
    values = expansion.table[0] + scaled[1] * signs[0]
    for k in range(depth):
        rows = (1 << (k + 1)) + (cells >> (depth - k))
        values = values + scaled[rows] * signs[k + 1]
    return values


def value_law(values: np.ndarray) -> Tuple[np.ndarray, List[Fraction]]:
    """
    Distinct rows of `values` with their exact probabilities (uniform weights).

    Signed zeros are merged.
    """
    values = np.asarray(values, dtype=float) + 0.0
    distinct, counts = np.unique(values, axis=0, return_counts=True)
    total = values.shape[0]
    return distinct, [Fraction(int(c), total) for c in counts]


def laws_equal(left: Tuple[np.ndarray, List[Fraction]], right: Tuple[np.ndarray, List[Fraction]]) -> Tuple[bool, int]:
    """Exact comparison of two laws; returns (equal, number of mismatched values)."""
    left_map: Dict[bytes, Fraction] = {row.tobytes(): p for row, p in zip(left[0], left[1])}
    right_map: Dict[bytes, Fraction] = {row.tobytes(): p for row, p in zip(right[0], right[1])}
    keys = set(left_map) | set(right_map)
    mismatched = sum(1 for key in keys if left_map.get(key) != right_map.get(key))
    return mismatched == 0, mismatched


def distribution_check(expansion: HaarExpansion) -> DistributionReport:
    """
    Compare the law of f on the grid with the law of lift(f) on quarter states.

    Raises:
        BudgetError: If K exceeds ENUMERATION_MAX_DEPTH
    """
    depth = expansion.depth
    check_enumeration_budget(depth)
    grid = grid_path_values(expansion)
    tossed = lift(expansion).evaluate_states()
    grid_law = value_law(grid)
    toss_law = value_law(tossed)
    equal, mismatched = laws_equal(grid_law, toss_law)
    deviation = float(np.max(np.abs(grid - synthesize(expansion))))
    if not equal:
        logger.warning(f"⚠️ Law mismatch at depth {depth}: {mismatched} values differ")
    return DistributionReport(
        equal=equal,
        depth=depth,
        n_cells=grid.shape[0],
        n_states=n_states(depth),
        distinct_values=len(grid_law[1]),
        mismatched_values=mismatched,
        synthesis_deviation=deviation,
    )


def toss_lp_norm(F: TossFunction, space: SpaceDescriptor) -> float:
    """(E |F|_X^p)^(1/p) by enumeration of quarter states."""
    if space.dim != F.dim:
        raise MalformedInputError("space dimension differs from the toss function", {"space": space.dim, "F": F.dim})
    return space.norm(F.evaluate_states())
