"""
verify-weak-form: E<F^H, G> = c0 E<S0 F, G> on random toss functions and lifts.
"""

import logging

from tqdm import tqdm

from hilbertlab.dyadic.haar import HaarExpansion
from hilbertlab.dyadic.operators import reduce_tilde
from hilbertlab.experiments.base import BaseExperiment
from hilbertlab.schemas.reports import WeakFormReport
from hilbertlab.toss.lift import random_toss_function
from hilbertlab.toss.pairing import weak_form_check, weak_form_check_toss

logger = logging.getLogger(__name__)


class WeakFormExperiment(BaseExperiment):
    """
    For every space and trial: a generic reduced F against a generic G, and a
    reduced lift against a lift. The space's dimension sets d; G pairs through
    the dual space.
    """

    name = "verify-weak-form"

    def _check(self, case: str, report: WeakFormReport, seconds: float) -> None:
        values = {"lhs": report.lhs, "rhs": report.rhs, "c0": report.c0, "projected_lhs": report.projected_lhs}
        if report.dyadic_pairing is not None:
            values["dyadic_pairing"] = report.dyadic_pairing
        if report.holder_envelope is not None:
            values["holder_envelope"] = report.holder_envelope
        self.record(
            case,
            values=values,
            residuals={"weak_form": report.residual, "routes": report.route_residual},
            passed=report.residual < self.config.tol and report.route_residual < self.config.tol,
            wall_time_s=seconds,
        )

    def execute(self) -> None:
        depth = self.config.depth
        p = self.config.exponents[0]
        stream = 0
        for space in self.config.space_descriptors(p):
            for trial in tqdm(range(self.config.trials), disable=not self.progress, desc=space.label):
                rng = self.rng(stream)
                stream += 1
                with self.timed() as clock:
                    F = random_toss_function(depth, space.dim, rng, reduced=True)
                    G = random_toss_function(depth, space.dim, rng, reduced=False)
                    report = weak_form_check_toss(F, G)
                self._check(f"{space.label}/toss/{trial}", report, clock["seconds"])

                with self.timed() as clock:
                    f = reduce_tilde(HaarExpansion.random(depth, space.dim, rng))
                    g = HaarExpansion.random(depth, space.dim, rng)
                    report = weak_form_check(f, g)
                self._check(f"{space.label}/lift/{trial}", report, clock["seconds"])
