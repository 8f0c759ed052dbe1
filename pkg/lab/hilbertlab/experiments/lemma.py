"""
verify-lemma: the quarter averages of H phi^sigma are c0 S0 phi^sigma.
"""

import logging

import numpy as np

from hilbertlab.circle.functions import PHI_SIGNS, QUARTER_LABELS, closed_form, probe_grid
from hilbertlab.circle.hilbert import SpectralFunction, sup_distance
from hilbertlab.circle.quadrature import compute_c0_estimate, pairing_moment, quarter_averages_of_H_phi
from hilbertlab.core.config import settings
from hilbertlab.experiments.base import BaseExperiment
from hilbertlab.schemas.sign import BOTH_SIGNS, Sign

logger = logging.getLogger(__name__)

# S0 phi+ = phi-, S0 phi- = -phi+
S0_IMAGES = {
    Sign.PLUS: PHI_SIGNS[Sign.MINUS],
    Sign.MINUS: -PHI_SIGNS[Sign.PLUS],
}


class LemmaExperiment(BaseExperiment):
    """c0 two ways, pi H phi^sigma against c0 S0 phi^sigma, and the pairing moments."""

    name = "verify-lemma"

    def execute(self) -> None:
        tol = self.config.tol

        with self.timed() as clock:
            estimate = compute_c0_estimate()
        self.record(
            "c0",
            values={
                "c0": estimate.value,
                "quadrature": estimate.quadrature,
                "series": estimate.series,
                "series_terms": estimate.series_terms,
            },
            residuals={"quadrature_vs_series": estimate.difference},
            passed=estimate.difference <= settings.C0_TOL,
            wall_time_s=clock["seconds"],
        )
        c0 = estimate.value

        for sigma in BOTH_SIGNS:
            with self.timed() as clock:
                averages = np.array(quarter_averages_of_H_phi(sigma))
                residual = float(np.max(np.abs(averages - c0 * S0_IMAGES[sigma])))
            values = {f"average_{label}": float(a) for label, a in zip(QUARTER_LABELS, averages)}
            self.record(
                f"projection/H_phi{sigma.symbol}",
                values=values,
                residuals={"max_abs": residual},
                passed=residual < tol,
                wall_time_s=clock["seconds"],
            )

        with self.timed() as clock:
            moments = {
                f"m({s.symbol},{e.symbol})": pairing_moment(s, e) for s in BOTH_SIGNS for e in BOTH_SIGNS
            }
            expected = {"m(+,+)": 0.0, "m(+,-)": c0, "m(-,+)": -c0, "m(-,-)": 0.0}
            residual = max(abs(moments[k] - expected[k]) for k in expected)
        self.record(
            "pairing_moments",
            values=moments,
            residuals={"max_abs": residual},
            passed=residual < tol,
            wall_time_s=clock["seconds"],
        )

        # spectral truncations against the closed forms, away from the singular points
        with self.timed() as clock:
            distances = {}
            for name in ("g", "H_phi+", "H_phi-"):
                exact = closed_form(name)
                spectral = SpectralFunction.from_named(name, settings.SPECTRAL_ORDER)
                probes = probe_grid(256, exact.breakpoints, settings.SINGULARITY_EXCLUSION)
                distances[f"sup_{name}"] = sup_distance(spectral, exact, probes)
        self.record("spectral_truncation", values=distances, wall_time_s=clock["seconds"])
        logger.info(f"c0 = {c0:.10f}")
