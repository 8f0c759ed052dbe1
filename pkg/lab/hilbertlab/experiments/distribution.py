"""
verify-distribution: f on the grid and lift(f) on quarter states have the same law.
"""

import logging

from hilbertlab.dyadic.haar import HaarExpansion
from hilbertlab.dyadic.operators import lp_norm
from hilbertlab.experiments.base import BaseExperiment
from hilbertlab.toss.lift import distribution_check, lift, toss_lp_norm

logger = logging.getLogger(__name__)


class DistributionExperiment(BaseExperiment):
    """Exact law comparison plus the L^p norm computed on both sides."""

    name = "verify-distribution"

    def execute(self) -> None:
        depth = self.config.depth
        stream = 0
        for p in self.config.exponents:
            for space in self.config.space_descriptors(p):
                for trial in range(self.config.trials):
                    rng = self.rng(stream)
                    stream += 1
                    with self.timed() as clock:
                        e = HaarExpansion.random(depth, space.dim, rng)
                        report = distribution_check(e)
                        grid_norm = lp_norm(e, space)
                        toss_norm = toss_lp_norm(lift(e), space)
                    transport = abs(grid_norm - toss_norm) / max(1.0, grid_norm)
                    self.record(
                        f"p={p:g}/{space.label}/{trial}",
                        values={
                            "distinct_values": report.distinct_values,
                            "n_cells": report.n_cells,
                            "n_states": report.n_states,
                            "grid_norm": grid_norm,
                            "toss_norm": toss_norm,
                        },
                        residuals={
                            "mismatched_values": report.mismatched_values,
                            "synthesis": report.synthesis_deviation,
                            "norm_transport": transport,
                        },
                        flags={"laws_equal": report.equal},
                        passed=report.equal and transport < self.config.tol,
                        wall_time_s=clock["seconds"],
                    )
