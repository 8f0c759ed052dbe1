"""
Spectral representation of circle functions and the Hilbert multiplier.

A SpectralFunction stores Fourier coefficients c_n for |n| <= N in an array
of length 2N + 1 (entry n + N holds c_n), so f(x) = sum_n c_n e^{inx}.
"""

from dataclasses import dataclass
from typing import Optional
import logging
import math

import numpy as np

from hilbertlab.circle.functions import CircleFunction
from hilbertlab.core.config import settings
from hilbertlab.exceptions import MalformedInputError

logger = logging.getLogger(__name__)


def hilbert_symbol(frequencies: np.ndarray) -> np.ndarray:
    """-i sgn(n)."""
    return -1j * np.sign(frequencies)


def square_wave_coefficients(frequencies: np.ndarray) -> np.ndarray:
    """Fourier coefficients of phi+ = sign cos: 2 sin(n pi/2) / (n pi), zero at n = 0."""
    n = np.asarray(frequencies, dtype=float)
    out = np.zeros(n.shape, dtype=complex)
    nonzero = n != 0
    out[nonzero] = 2.0 * np.sin(n[nonzero] * math.pi / 2.0) / (n[nonzero] * math.pi)
    return out


def arc_coefficients(frequencies: np.ndarray) -> np.ndarray:
    """Fourier coefficients of chi_(-pi/2, pi/2): sin(n pi/2) / (n pi), 1/2 at n = 0."""
    n = np.asarray(frequencies, dtype=float)
    out = np.full(n.shape, 0.5, dtype=complex)
    nonzero = n != 0
    out[nonzero] = np.sin(n[nonzero] * math.pi / 2.0) / (n[nonzero] * math.pi)
    return out


@dataclass(frozen=True)
class SpectralFunction(CircleFunction):
    """Truncated Fourier series sum_{|n| <= N} c_n e^{inx}."""

    coefficients: np.ndarray
    name: str = "spectral"

    def __post_init__(self):
        coefficients = np.array(self.coefficients, dtype=complex)
        if coefficients.ndim != 1 or coefficients.shape[0] % 2 != 1:
            raise MalformedInputError(
                "coefficients must be a 1-D array of odd length 2N + 1",
                {"shape": coefficients.shape},
            )
        coefficients.setflags(write=False)
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def from_named(cls, name: str, order: Optional[int] = None) -> "SpectralFunction":
        """
        Truncated series of a named function.

        Args:
            name: One of "chi_arc", "phi+", "phi-", "g", "H_phi+", "H_phi-"
            order: Truncation N, defaults to settings.SPECTRAL_ORDER
        """
        order = order or settings.SPECTRAL_ORDER
        n = np.arange(-order, order + 1)
        if name == "chi_arc":
            return cls(arc_coefficients(n), name)
        if name == "phi+":
            return cls(square_wave_coefficients(n), name)
        if name == "phi-":
            # phi-(x) = phi+(x - pi/2)
            return cls(np.exp(-0.5j * math.pi * n) * square_wave_coefficients(n), name)
        if name == "g":
            return hilbert_multiplier(cls.from_named("chi_arc", order)).renamed("g")
        if name in ("H_phi+", "H_phi-"):
            base = cls.from_named(name[2:], order)
            return hilbert_multiplier(base).renamed(name)
        raise MalformedInputError(f"no series for '{name}'")

    @property
    def order(self) -> int:
        return (self.coefficients.shape[0] - 1) // 2

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(-self.order, self.order + 1)

    def coefficient(self, n: int) -> complex:
        if abs(n) > self.order:
            return 0j
        return complex(self.coefficients[n + self.order])

    def renamed(self, name: str) -> "SpectralFunction":
        return SpectralFunction(self.coefficients, name)

    def is_real(self, atol: float = 1e-14) -> bool:
        """c_{-n} = conj(c_n)."""
        return bool(np.allclose(self.coefficients[::-1], np.conj(self.coefficients), rtol=0.0, atol=atol))

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        phases = np.exp(1j * np.multiply.outer(x, self.frequencies))
        values = phases @ self.coefficients
        if self.is_real():
            values = values.real
        return values if values.ndim else values.item()


def hilbert_multiplier(f: SpectralFunction) -> SpectralFunction:
    """c_n -> -i sgn(n) c_n; the constant term is annihilated."""
    return SpectralFunction(hilbert_symbol(f.frequencies) * f.coefficients, f"H[{f.name}]")


def sup_distance(spectral: SpectralFunction, exact: CircleFunction, probes: np.ndarray) -> float:
    """max |spectral - exact| over the probe angles."""
    return float(np.max(np.abs(spectral.evaluate(probes) - exact.evaluate(probes))))
