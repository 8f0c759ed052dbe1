"""
Quarter-arc projection, the constant c0 and the pairing moments.

Averages are computed with scipy's adaptive QUADPACK integrator on fixed
panels; log singularities only ever sit at panel endpoints, where the
integrator never evaluates. Panels are summed in a fixed order so results do
not depend on the worker count.
"""

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Callable, Sequence, Tuple, Union
import logging
import math

import numpy as np
from scipy import integrate

from hilbertlab.circle.functions import (
    QUARTER_PANELS,
    PHI_SIGNS,
    CircleFunction,
    closed_form,
)
from hilbertlab.core.config import settings, quadrature_target
from hilbertlab.exceptions import AccuracyError, InternalConsistencyError
from hilbertlab.schemas.reports import C0Estimate
from hilbertlab.schemas.sign import Sign

logger = logging.getLogger(__name__)

Integrand = Union[CircleFunction, Callable[[float], float]]


def _scalar(f: Integrand) -> Callable[[float], float]:
    return lambda x: float(f(x))


def _interior_breakpoints(f: Integrand, a: float, b: float) -> Sequence[float]:
    points = getattr(f, "breakpoints", ())
    return [p for p in points if a < p < b]


def integrate_panel(f: Integrand, a: float, b: float) -> Tuple[float, float]:
    """
    integral_a^b f by adaptive quadrature.

    Returns:
        (value, error estimate)

    Raises:
        AccuracyError: If the error estimate exceeds the configured target
    """
    points = _interior_breakpoints(f, a, b) or None
    result = integrate.quad(
        _scalar(f),
        a,
        b,
        epsabs=settings.QUAD_ABS_TOL,
        epsrel=0.0,
        limit=settings.QUAD_LIMIT,
        points=points,
        full_output=1,
    )
    value, error = result[0], result[1]
    target = quadrature_target()
    if not math.isfinite(value) or error > target:
        raise AccuracyError(
            "quadrature did not converge",
            achieved=float(error),
            target=target,
            panel=f"[{a:.6g}, {b:.6g})",
        )
    return float(value), float(error)


def _panel_average(args) -> Tuple[float, float]:
    f, (a, b) = args
    value, error = integrate_panel(f, a, b)
    return value / (b - a), error / (b - a)


def _map_panels(f: Integrand) -> list:
    jobs = [(f, panel) for panel in QUARTER_PANELS]
    if settings.WORKERS > 1:
        with ThreadPoolExecutor(max_workers=settings.WORKERS) as pool:
            return list(pool.map(_panel_average, jobs))
    return [_panel_average(job) for job in jobs]


def project_quarters(f: Integrand) -> np.ndarray:
    """
    The quarter averages <f>_{A_i}, i = -2, -1, 0, 1.

    Returns:
        Array of 4 averages in the order (A_-2, A_-1, A_0, A_1)
    """
    averages = np.array([value for value, _ in _map_panels(f)])
    logger.debug(f"Quarter averages of {getattr(f, 'name', 'f')}: {averages}")
    return averages


def circle_mean(f: Integrand) -> float:
    """(1/2 pi) integral f over the torus."""
    return float(np.mean(project_quarters(f)))


def circle_pairing(f: Integrand, g: Integrand) -> float:
    """(1/2 pi) integral f g over the torus, split at the breakpoints of both."""
    breaks = tuple(getattr(f, "breakpoints", ())) + tuple(getattr(g, "breakpoints", ()))

    class _Product(CircleFunction):
        name = "product"

        def evaluate(self, x):
            return f(x) * g(x)

        @property
        def breakpoints(self):
            return tuple(sorted(set(breaks)))

    return circle_mean(_Product())


def quarter_pairing(f_values: np.ndarray, g_values: np.ndarray) -> float:
    """(pi f, pi g) from the two quarter-average vectors."""
    return float(np.mean(np.asarray(f_values) * np.asarray(g_values)))


def catalan_series(tol: float) -> Tuple[float, int]:
    """
    sum_{k >= 0} (-1)^k / (2k+1)^2 truncated once the next term is below tol.

    Summed smallest terms first.
    """
    n_terms = int(math.ceil((1.0 / math.sqrt(tol) - 1.0) / 2.0)) + 1
    k = np.arange(n_terms, dtype=float)
    terms = np.where(k % 2 == 0, 1.0, -1.0) / (2.0 * k + 1.0) ** 2
    return float(np.sum(terms[::-1])), n_terms


@lru_cache(maxsize=1)
def compute_c0_estimate() -> C0Estimate:
    """
    c0 = <H phi+>_{A_0}, by quadrature of the closed form and by the series
    (8/pi^2) sum (-1)^k/(2k+1)^2.

    Raises:
        InternalConsistencyError: If the two values differ by more than C0_TOL
    """
    a, b = QUARTER_PANELS[2]
    value, error = integrate_panel(closed_form("H_phi+"), a, b)
    quadrature = value / (b - a)
    catalan, n_terms = catalan_series(settings.SERIES_TAIL_TOL)
    series = 8.0 / math.pi ** 2 * catalan
    difference = abs(quadrature - series)
    if difference > settings.C0_TOL:
        raise InternalConsistencyError(
            "c0 from quadrature and from the series disagree",
            {"quadrature": quadrature, "series": series, "difference": difference},
        )
    logger.info(f"✅ c0 = {series:.12f} (quadrature agrees to {difference:.2e})")
    return C0Estimate(
        value=series,
        quadrature=quadrature,
        quadrature_error=error / (b - a),
        series=series,
        series_terms=n_terms,
        difference=difference,
    )


def compute_c0() -> float:
    """The proportionality constant in pi H phi^sigma = c0 S0 phi^sigma (about 0.742453)."""
    return compute_c0_estimate().value


@lru_cache(maxsize=2)
def quarter_averages_of_H_phi(sigma: Sign) -> Tuple[float, float, float, float]:
    """pi H phi^sigma, cached."""
    return tuple(project_quarters(closed_form(f"H_phi{Sign.parse(sigma).symbol}")))


@lru_cache(maxsize=4)
def pairing_moment(sigma: Sign, eta: Sign) -> float:
    """
    E[(H phi^sigma) phi^eta] over the torus.

    phi^eta is constant on quarters, so the integral is the quarter-weighted
    sum of the averages of H phi^sigma. Expected: 0 for sigma = eta, +c0 for
    (+, -), -c0 for (-, +).
    """
    averages = np.array(quarter_averages_of_H_phi(Sign.parse(sigma)))
    return quarter_pairing(averages, PHI_SIGNS[Sign.parse(eta)])
