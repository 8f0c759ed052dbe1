"""
estimate-norms: s_p and h_p lower bounds and their ratio against slack/c0.
"""

import logging

from hilbertlab.experiments.base import BaseExperiment
from hilbertlab.norms.estimates import comparison_experiment

logger = logging.getLogger(__name__)


class NormsExperiment(BaseExperiment):
    """One record per (p, space) comparison row; passes iff the ratio is within the envelope."""

    name = "estimate-norms"

    def execute(self) -> None:
        with self.timed() as clock:
            rows = comparison_experiment(self.config, progress=self.progress)
        share = clock["seconds"] / max(1, len(rows))
        for row in rows:
            values = {
                "s_p_lower": row.s_p_lower,
                "h_p_lower": row.h_p_lower,
                "ratio": row.ratio,
                "c0": row.c0,
                "inv_c0": row.inv_c0,
                "three_over_c0": row.three_over_c0,
                "slack": row.slack,
            }
            if row.m_p_lower is not None:
                values["m_p_lower"] = row.m_p_lower
            self.record(
                f"p={row.p:g}/{row.space}",
                values=values,
                flags={"within_bound": row.within_bound},
                passed=row.within_bound,
                wall_time_s=share,
            )
