"""
Closed-form functions on the torus [-pi, pi).

Square waves phi+ = sign cos and phi- = sign sin, the conjugate function
g = H chi_(-pi/2, pi/2) and the combinations H phi+ / H phi- built from it.
The Hilbert transform is normalized as the multiplier -i sgn(n).
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Dict, Sequence, Tuple
import logging
import math

import numpy as np

from hilbertlab.exceptions import SingularityError, MalformedInputError
from hilbertlab.schemas.sign import Sign

logger = logging.getLogger(__name__)

HALF_PI = math.pi / 2.0

# Quarter arcs A_-2, A_-1, A_0, A_1 = [i pi/2, i pi/2 + pi/2), indexed 0..3
QUARTER_STARTS = np.array([-math.pi, -HALF_PI, 0.0, HALF_PI])
QUARTER_LABELS = ("A_-2", "A_-1", "A_0", "A_1")
QUARTER_PANELS: Tuple[Tuple[float, float], ...] = tuple(
    (float(a), float(a + HALF_PI)) for a in QUARTER_STARTS
)

# sign of cos / sin on each quarter
PHI_SIGNS: Dict[Sign, np.ndarray] = {
    Sign.PLUS: np.array([-1.0, 1.0, 1.0, -1.0]),
    Sign.MINUS: np.array([-1.0, -1.0, 1.0, 1.0]),
}

_SINGULAR_ATOL = 8.0 * np.finfo(float).eps * math.pi


def wrap_angle(x):
    """((x + pi) mod 2 pi) - pi."""
    return np.mod(np.asarray(x, dtype=float) + math.pi, 2.0 * math.pi) - math.pi


def quarter_index(theta) -> np.ndarray:
    """Index 0..3 of the quarter arc containing each angle."""
    wrapped = wrap_angle(theta)
    return np.clip(np.floor((wrapped + math.pi) / HALF_PI).astype(int), 0, 3)


def phi(sigma: Sign, theta):
    """
    phi+(theta) = sign cos(theta), phi-(theta) = sign sin(theta).

    Zeros of cos / sin get the value +1.
    """
    sigma = Sign.parse(sigma)
    wrapped = wrap_angle(theta)
    values = PHI_SIGNS[sigma][quarter_index(wrapped)]
    if sigma is Sign.PLUS:
        zeros = np.abs(np.abs(wrapped) - HALF_PI) <= _SINGULAR_ATOL
    else:
        zeros = (np.abs(wrapped) <= _SINGULAR_ATOL) | (np.abs(wrapped + math.pi) <= _SINGULAR_ATOL)
    values = np.where(zeros, 1.0, values)
    return values if values.ndim else float(values)


def chi_arc(x):
    """Indicator of the open arc (-pi/2, pi/2)."""
    wrapped = wrap_angle(x)
    values = ((wrapped > -HALF_PI) & (wrapped < HALF_PI)).astype(float)
    return values if values.ndim else float(values)


def _in_range(x) -> np.ndarray:
    """Wrap only the angles outside [-pi, pi) so in-range singular points stay exact."""
    x = np.asarray(x, dtype=float)
    return np.where((x >= -math.pi) & (x < math.pi), x, wrap_angle(x))


def eval_g(x):
    """
    g(x) = H chi_(-pi/2, pi/2)(x) = (1/pi) ln |sin((x + pi/2)/2) / sin((x - pi/2)/2)|.

    Odd, zero at 0 and +-pi, tends to +inf as x -> pi/2.

    Raises:
        SingularityError: If any x sits at +-pi/2
    """
    wrapped = _in_range(x)
    numerator = np.sin((wrapped + HALF_PI) / 2.0)
    denominator = np.sin((wrapped - HALF_PI) / 2.0)
    singular = (numerator == 0.0) | (denominator == 0.0)
    if np.any(singular):
        bad = np.atleast_1d(wrapped)[np.atleast_1d(singular)][0]
        raise SingularityError("g is singular at +-pi/2", {"x": float(bad)})
    values = np.log(np.abs(numerator) / np.abs(denominator)) / math.pi
    return values if values.ndim else float(values)


def eval_H_phi(sigma: Sign, x):
    """
    H phi+(x) = g(x) - g(x + pi),  H phi-(x) = g(x - pi/2) - g(x + pi/2).

    Arguments are wrapped to [-pi, pi). H phi+ is singular at +-pi/2, H phi-
    at 0 and -pi.
    """
    sigma = Sign.parse(sigma)
    x = np.asarray(x, dtype=float)
    if sigma is Sign.PLUS:
        values = eval_g(x) - eval_g(_in_range(x + math.pi))
    else:
        values = eval_g(_in_range(x - HALF_PI)) - eval_g(_in_range(x + HALF_PI))
    return values


class CircleFunction(ABC):
    """A function on the torus that can be evaluated pointwise."""

    # no class-level default: dataclass subclasses declare name as a field
    name: str

    @abstractmethod
    def evaluate(self, x):
        """Values at the angles x (scalar or array)."""

    @property
    def singularities(self) -> Tuple[float, ...]:
        """Points where the function is unbounded or undefined."""
        return ()

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        """Points where the function jumps or is singular; quadrature splits there."""
        return self.singularities

    def __call__(self, x):
        return self.evaluate(x)


@dataclass(frozen=True)
class ClosedFormFunction(CircleFunction):
    """A named closed-form evaluator."""

    name: str
    evaluator: Callable = field(repr=False)
    jumps: Tuple[float, ...] = ()
    poles: Tuple[float, ...] = ()

    def evaluate(self, x):
        return self.evaluator(x)

    @property
    def singularities(self) -> Tuple[float, ...]:
        return self.poles

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        return tuple(sorted(set(self.jumps) | set(self.poles)))


_CLOSED_FORMS: Dict[str, ClosedFormFunction] = {
    "phi+": ClosedFormFunction("phi+", lambda x: phi(Sign.PLUS, x), jumps=(-HALF_PI, HALF_PI)),
    "phi-": ClosedFormFunction("phi-", lambda x: phi(Sign.MINUS, x), jumps=(-math.pi, 0.0)),
    "chi_arc": ClosedFormFunction("chi_arc", chi_arc, jumps=(-HALF_PI, HALF_PI)),
    "g": ClosedFormFunction("g", eval_g, poles=(-HALF_PI, HALF_PI)),
    "H_phi+": ClosedFormFunction(
        "H_phi+", lambda x: eval_H_phi(Sign.PLUS, x), poles=(-HALF_PI, HALF_PI)
    ),
    "H_phi-": ClosedFormFunction(
        "H_phi-", lambda x: eval_H_phi(Sign.MINUS, x), poles=(-math.pi, 0.0)
    ),
}

NAMED_FUNCTIONS = tuple(_CLOSED_FORMS)


def closed_form(name: str) -> ClosedFormFunction:
    """Look up one of NAMED_FUNCTIONS."""
    try:
        return _CLOSED_FORMS[name]
    except KeyError:
        raise MalformedInputError(
            f"unknown circle function '{name}'", {"available": ", ".join(NAMED_FUNCTIONS)}
        ) from None


def quarter_step_function(values: Sequence[float], name: str = "step") -> ClosedFormFunction:
    """The function equal to values[i] on the quarter arc i."""
    table = np.asarray(values, dtype=float)
    if table.shape != (4,):
        raise MalformedInputError("a quarter step function needs 4 values", {"shape": table.shape})

    def evaluator(x):
        result = table[quarter_index(x)]
        return result if result.ndim else float(result)

    return ClosedFormFunction(name, evaluator, jumps=tuple(float(a) for a in QUARTER_STARTS))


def probe_grid(n_points: int, avoid: Sequence[float], exclusion: float) -> np.ndarray:
    """Uniform angles in [-pi, pi) farther than `exclusion` from every point in `avoid`."""
    grid = -math.pi + 2.0 * math.pi * (np.arange(n_points) + 0.5) / n_points
    keep = np.ones(n_points, dtype=bool)
    for point in avoid:
        keep &= np.abs(wrap_angle(grid - point)) > exclusion
    return grid[keep]
