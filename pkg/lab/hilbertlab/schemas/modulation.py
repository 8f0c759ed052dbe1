"""
Modulation schedule schema.

n_0 = 1 and n_{k+1} = 2 n_k N_k. Frequencies l_0 n_0 + ... + l_k n_k are
computed in int64, so the schedule is capped well below 2^63.
"""

from typing import Tuple

from pydantic import Field, model_validator

from hilbertlab.schemas.base import FrozenLabModel

# largest n_k accepted; leaves headroom for |l| * sum(n) in int64
MAX_FREQUENCY = 1 << 52


class ModulationSchedule(FrozenLabModel):
    """The paired sequences (N_k) and (n_k)."""
    N: Tuple[int, ...] = Field(..., description="Cumulative spectrum bounds N_0..N_{L-1}")
    n: Tuple[int, ...] = Field(..., description="Frequencies n_0..n_L")

    @model_validator(mode="after")
    def check_recursion(self) -> "ModulationSchedule":
        if len(self.n) != len(self.N) + 1:
            raise ValueError("a schedule has exactly one more n than N")
        if any(b < 1 for b in self.N):
            raise ValueError("all N_k must be >= 1")
        if self.n[0] != 1:
            raise ValueError("n_0 must be 1")
        for k, bound in enumerate(self.N):
            if self.n[k + 1] != 2 * self.n[k] * bound:
                raise ValueError(f"n_{k + 1} != 2 n_{k} N_{k}")
        return self

    @property
    def n_variables(self) -> int:
        return len(self.n)

    def frequencies(self, n_vars: int) -> Tuple[int, ...]:
        """(n_0, ..., n_{n_vars-1})."""
        if n_vars > len(self.n):
            raise ValueError(f"schedule covers {len(self.n)} variables, {n_vars} requested")
        return self.n[:n_vars]
