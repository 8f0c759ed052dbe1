"""
Dyadic interval schema.

An interval (k, m) of the unit interval is [m 2^-k, (m+1) 2^-k). Intervals are
also addressed by their heap index 2^k + m, which is the row they occupy in a
Haar coefficient table (row 0 holds the mean).
"""

from typing import Tuple

from pydantic import Field, model_validator

from hilbertlab.schemas.base import FrozenLabModel


class DyadicInterval(FrozenLabModel):
    """A dyadic subinterval of I0 = [0, 1)."""
    depth: int = Field(..., ge=0, description="Generation k; length is 2^-k")
    position: int = Field(..., ge=0, description="Index m in [0, 2^k)")

    @model_validator(mode="after")
    def check_position(self) -> "DyadicInterval":
        if self.position >= 1 << self.depth:
            raise ValueError(f"position {self.position} outside [0, 2^{self.depth})")
        return self

    # ---------- geometry ----------

    @property
    def length(self) -> float:
        return 2.0 ** (-self.depth)

    @property
    def left(self) -> float:
        return self.position * self.length

    @property
    def right(self) -> float:
        return (self.position + 1) * self.length

    @property
    def bounds(self) -> Tuple[float, float]:
        return self.left, self.right

    def contains(self, x: float) -> bool:
        return self.left <= x < self.right

    # ---------- tree structure ----------

    @property
    def heap_index(self) -> int:
        return (1 << self.depth) + self.position

    @classmethod
    def from_heap_index(cls, index: int) -> "DyadicInterval":
        if index < 1:
            raise ValueError("heap indices start at 1 (row 0 is the mean)")
        depth = index.bit_length() - 1
        return cls(depth=depth, position=index - (1 << depth))

    @classmethod
    def root(cls) -> "DyadicInterval":
        return cls(depth=0, position=0)

    @property
    def is_root(self) -> bool:
        return self.depth == 0

    @property
    def is_plus(self) -> bool:
        """Right child of its parent (I+). The root has no parity."""
        return self.depth > 0 and self.position % 2 == 1

    @property
    def is_minus(self) -> bool:
        return self.depth > 0 and self.position % 2 == 0

    def parent(self) -> "DyadicInterval":
        if self.depth == 0:
            raise ValueError("I0 has no parent")
        return DyadicInterval(depth=self.depth - 1, position=self.position // 2)

    def minus_child(self) -> "DyadicInterval":
        return DyadicInterval(depth=self.depth + 1, position=2 * self.position)

    def plus_child(self) -> "DyadicInterval":
        return DyadicInterval(depth=self.depth + 1, position=2 * self.position + 1)

    def children(self) -> Tuple["DyadicInterval", "DyadicInterval"]:
        return self.minus_child(), self.plus_child()

    def sibling(self) -> "DyadicInterval":
        if self.depth == 0:
            raise ValueError("I0 has no sibling")
        return DyadicInterval(depth=self.depth, position=self.position ^ 1)

    def __str__(self) -> str:
        return f"[{self.left:g}, {self.right:g})"


def intervals_up_to(depth: int):
    """All dyadic intervals of depth <= `depth`, in heap order."""
    for k in range(depth + 1):
        for m in range(1 << k):
            yield DyadicInterval(depth=k, position=m)
