"""
verify-modulation: the modulation identity, schedule dominance and the
psi-averaging chain on truncated series.
"""

import logging
import math

from hilbertlab.dyadic.haar import HaarExpansion
from hilbertlab.exceptions import ScheduleTooSmallError
from hilbertlab.experiments.base import BaseExperiment
from hilbertlab.modulation.identity import DEFAULT_PSIS, lemma_chain, verify_modulation_identity
from hilbertlab.modulation.schedule import build_schedule, spectrum_bounds
from hilbertlab.modulation.trig import expand_toss_function
from hilbertlab.toss.lift import random_toss_function

logger = logging.getLogger(__name__)

# the chain enumerates a (2M+1)^(K+1) angle grid and modulates at every point
CHAIN_MAX_DEPTH = 2
PROBE_ANGLES = 4
PROBE_PSIS = 5


class ModulationExperiment(BaseExperiment):
    """Residuals of the identity per level, an undersized schedule, and the chain."""

    name = "verify-modulation"

    def execute(self) -> None:
        depth = self.config.depth
        order = self.config.order
        tol = self.config.tol

        for trial in range(self.config.trials):
            rng = self.rng(trial)
            with self.timed() as clock:
                f = HaarExpansion.random(depth, 1, rng)
                thetas = rng.uniform(-math.pi, math.pi, size=(PROBE_ANGLES, depth + 1))
                psis = rng.uniform(-math.pi, math.pi, size=PROBE_PSIS)
                report = verify_modulation_identity(f, order, thetas, psis)
            values = {"n_terms": report.n_terms, **{f"n_{k}": n for k, n in enumerate(report.schedule.n)}}
            self.record(
                f"identity/{trial}",
                values=values,
                residuals={"max": report.max_residual, **report.level_residuals},
                flags={"dominance": report.dominance_ok},
                passed=report.max_residual < tol and report.dominance_ok,
                wall_time_s=clock["seconds"],
            )

        if depth >= 1 and order >= 2:
            with self.timed() as clock:
                f = HaarExpansion.random(depth, 1, self.rng(self.config.trials))
                undersized = build_schedule((1,) * depth)
                try:
                    verify_modulation_identity(f, order, [[0.0] * (depth + 1)], [0.0], schedule=undersized)
                    rejected = False
                except ScheduleTooSmallError as e:
                    logger.debug(f"Undersized schedule rejected: {e}")
                    rejected = True
            self.record(
                "undersized_schedule",
                flags={"rejected": rejected},
                passed=rejected,
                wall_time_s=clock["seconds"],
            )

        chain_depth = min(depth, CHAIN_MAX_DEPTH)
        rng = self.rng(self.config.trials + 1)
        with self.timed() as clock:
            F = random_toss_function(chain_depth, 1, rng, reduced=True)
            G = random_toss_function(chain_depth, 1, rng, reduced=False)
            minimal = build_schedule(spectrum_bounds(expand_toss_function(F, order)))
            doubled = build_schedule(tuple(2 * b for b in minimal.N))
            first = lemma_chain(F, G, order, minimal, DEFAULT_PSIS)
            second = lemma_chain(F, G, order, doubled, DEFAULT_PSIS)
            spread = max(
                first.max_spread,
                second.max_spread,
                abs(first.psi_hilbert_pairing - second.psi_hilbert_pairing),
            )
        self.record(
            f"chain/depth_{chain_depth}",
            values={
                "truncated_pairing": first.truncated_pairing,
                "modulated_pairing": first.modulated_pairing,
                "psi_hilbert_pairing": first.psi_hilbert_pairing,
                "psi_hilbert_pairing_doubled_N": second.psi_hilbert_pairing,
            },
            residuals={"spread": spread},
            passed=spread < tol,
            wall_time_s=clock["seconds"],
        )
