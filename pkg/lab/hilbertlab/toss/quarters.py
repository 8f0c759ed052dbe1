"""
Quarter states: the outcome of an angle sequence theta_0..theta_K recorded as
the quarter arc each angle fell in.

States are enumerated in lexicographic order with q_0 most significant, so
state s has q_j = (s // 4^(K-j)) % 4 and its length-(k+1) prefix code is
s // 4^(K-k).
"""

from typing import Tuple
import logging

import numpy as np
from pydantic import Field, field_validator

from hilbertlab.circle.functions import PHI_SIGNS, quarter_index
from hilbertlab.core.config import settings
from hilbertlab.exceptions import BudgetError
from hilbertlab.schemas.base import FrozenLabModel
from hilbertlab.schemas.sign import Sign

logger = logging.getLogger(__name__)


class QuarterState(FrozenLabModel):
    """One outcome (q_0, ..., q_K), q_j in {0, 1, 2, 3} for (A_-2, A_-1, A_0, A_1)."""
    quarters: Tuple[int, ...] = Field(..., min_length=1)

    @field_validator("quarters")
    @classmethod
    def validate_quarters(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(q not in (0, 1, 2, 3) for q in v):
            raise ValueError("quarter indices must lie in 0..3")
        return v

    @classmethod
    def from_angles(cls, thetas) -> "QuarterState":
        return cls(quarters=tuple(int(q) for q in np.atleast_1d(quarter_index(thetas))))

    @classmethod
    def from_code(cls, code: int, depth: int) -> "QuarterState":
        digits = [(code >> (2 * (depth - j))) & 3 for j in range(depth + 1)]
        return cls(quarters=tuple(digits))

    @property
    def depth(self) -> int:
        return len(self.quarters) - 1

    @property
    def code(self) -> int:
        code = 0
        for q in self.quarters:
            code = 4 * code + q
        return code

    @property
    def probability(self) -> float:
        return 4.0 ** -len(self.quarters)

    def toss(self, j: int, sigma: Sign) -> int:
        """epsilon_j^sigma = phi^sigma(theta_j)."""
        return int(PHI_SIGNS[Sign.parse(sigma)][self.quarters[j]])

    def tosses(self) -> Tuple[int, ...]:
        """(eps_0, eps_1^-, eps_1^+, ..., eps_K^-, eps_K^+) with eps_0 = phi+(theta_0)."""
        out = [self.toss(0, Sign.PLUS)]
        for j in range(1, len(self.quarters)):
            out.extend((self.toss(j, Sign.MINUS), self.toss(j, Sign.PLUS)))
        return tuple(out)


def check_enumeration_budget(depth: int) -> None:
    """Refuse to enumerate 4^(K+1) states beyond ENUMERATION_MAX_DEPTH."""
    if depth > settings.ENUMERATION_MAX_DEPTH:
        raise BudgetError(
            "quarter enumeration exceeds the budget",
            {"depth": depth, "max_depth": settings.ENUMERATION_MAX_DEPTH},
        )


def n_states(depth: int) -> int:
    return 4 ** (depth + 1)


def enumerate_states(depth: int) -> np.ndarray:
    """
    All quarter states of K+1 angles.

    Returns:
        Integer array of shape (4^(K+1), K+1); row s lists (q_0, ..., q_K)
    """
    check_enumeration_budget(depth)
    codes = np.arange(n_states(depth))
    shifts = 2 * np.arange(depth, -1, -1)
    return (codes[:, None] >> shifts[None, :]) & 3


def prefix_codes(depth: int, level: int) -> np.ndarray:
    """Code of the prefix (q_0..q_level) for every state of depth K."""
    return np.arange(n_states(depth)) >> (2 * (depth - level))


def toss_table(states: np.ndarray, sigma: Sign) -> np.ndarray:
    """phi^sigma(theta_j) for every state and every j (same shape as states)."""
    return PHI_SIGNS[Sign.parse(sigma)][states]
