"""
Target space descriptors: L^p with values in the scalars or in l_q^d.
"""

import math
from typing import Optional

import numpy as np
from pydantic import Field, field_validator, model_validator

from hilbertlab.schemas.base import FrozenLabModel


def conjugate_exponent(r: float) -> float:
    """Holder conjugate r' with 1/r + 1/r' = 1 (1 <-> inf)."""
    if r == 1:
        return math.inf
    if math.isinf(r):
        return 1.0
    return r / (r - 1.0)


class SpaceDescriptor(FrozenLabModel):
    """
    The space L^p_X on a probability space, X = R (q is None) or l_q^d.

    The dual Lebesgue exponent is `p_dual`; q is always the inner l_q exponent.
    """
    p: float = Field(..., description="Lebesgue exponent in (1, inf)")
    q: Optional[float] = Field(None, description="Inner l_q exponent in [1, inf]; None for scalars")
    dim: int = Field(1, ge=1, description="Dimension d of X")

    @field_validator("p")
    @classmethod
    def validate_p(cls, v: float) -> float:
        if not (1.0 < v < math.inf):
            raise ValueError(f"p must lie in (1, inf), got {v}")
        return float(v)

    @field_validator("q")
    @classmethod
    def validate_q(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and not v >= 1.0:
            raise ValueError(f"q must lie in [1, inf], got {v}")
        return None if v is None else float(v)

    @model_validator(mode="after")
    def check_scalar(self) -> "SpaceDescriptor":
        if self.q is None and self.dim != 1:
            raise ValueError("scalar spaces have dim 1; give q for l_q^d")
        return self

    # ---------- constructors ----------

    @classmethod
    def scalar(cls, p: float) -> "SpaceDescriptor":
        return cls(p=p)

    @classmethod
    def lq(cls, p: float, q: float, dim: int) -> "SpaceDescriptor":
        return cls(p=p, q=q, dim=dim)

    @classmethod
    def parse(cls, p: float, label: str) -> "SpaceDescriptor":
        """
        Build from a label: "scalar" or "l<q>^<d>" (e.g. "l3^4", "l1.5^2").
        """
        label = label.strip().lower()
        if label in ("scalar", "r"):
            return cls.scalar(p)
        if not label.startswith("l") or "^" not in label:
            raise ValueError(f"space label must be 'scalar' or 'l<q>^<d>', got '{label}'")
        q_text, d_text = label[1:].split("^", 1)
        q = math.inf if q_text in ("inf", "infty") else float(q_text)
        return cls.lq(p, q, int(d_text))

    # ---------- derived ----------

    @property
    def is_scalar(self) -> bool:
        return self.q is None

    @property
    def p_dual(self) -> float:
        return conjugate_exponent(self.p)

    @property
    def q_dual(self) -> Optional[float]:
        return None if self.q is None else conjugate_exponent(self.q)

    @property
    def label(self) -> str:
        if self.is_scalar:
            return "scalar"
        q = "inf" if math.isinf(self.q) else f"{self.q:g}"
        return f"l{q}^{self.dim}"

    def dual(self) -> "SpaceDescriptor":
        return SpaceDescriptor(p=self.p_dual, q=self.q_dual, dim=self.dim)

    def with_p(self, p: float) -> "SpaceDescriptor":
        return SpaceDescriptor(p=p, q=self.q, dim=self.dim)

    # ---------- norms ----------

    def pointwise_norm(self, values: np.ndarray) -> np.ndarray:
        """
        |v|_X for an array of shape (..., dim).
        """
        values = np.asarray(values, dtype=float)
        if values.shape[-1] != self.dim:
            raise ValueError(f"expected trailing dimension {self.dim}, got {values.shape[-1]}")
        if self.is_scalar:
            return np.abs(values[..., 0])
        return np.linalg.norm(values, ord=self.q, axis=-1)

    def norm(self, values: np.ndarray, weights: Optional[np.ndarray] = None) -> float:
        """
        (sum_c w_c |v_c|_X^p)^(1/p) over cells c; uniform weights by default.
        """
        pointwise = self.pointwise_norm(values)
        if weights is None:
            weights = np.full(pointwise.shape[0], 1.0 / pointwise.shape[0])
        return float(np.sum(weights * pointwise ** self.p) ** (1.0 / self.p))
