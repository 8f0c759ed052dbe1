"""
materialize: dump operator matrices and their structural checks.
"""

from pathlib import Path
import logging

import numpy as np

from hilbertlab.core.config import get_output_dir
from hilbertlab.experiments.base import BaseExperiment
from hilbertlab.norms.operators import materialize, norm_2_exact, singular_values

logger = logging.getLogger(__name__)


class MaterializeExperiment(BaseExperiment):
    """
    Writes one .npy file per (operator, space) next to the result file and
    records the exact L^2 norm, the skew residual and the singular value range.
    """

    name = "materialize"

    def _matrix_dir(self) -> Path:
        if self.config.output is not None:
            directory = self.config.output.parent
            directory.mkdir(parents=True, exist_ok=True)
            return directory
        return get_output_dir()

    def execute(self) -> None:
        directory = self._matrix_dir()
        p = self.config.exponents[0]
        for name in self.config.operators:
            for space in self.config.space_descriptors(p):
                with self.timed() as clock:
                    op = materialize(name, depth=self.config.depth, space=space, grid=self.config.grid)
                    path = directory / f"{self.experiment_id}_{name}_{space.label}.npy"
                    np.save(path, op.matrix)
                    sv = singular_values(op)
                    skew = float(np.max(np.abs(op.matrix + op.matrix.T)))
                logger.info(f"💾 {name} ({op.size}x{op.size}) written to {path}")
                self.record(
                    f"{name}/{space.label}",
                    values={
                        "size": op.size,
                        "norm_2": norm_2_exact(op),
                        "sigma_min": float(sv[-1]),
                        "sigma_max": float(sv[0]),
                    },
                    residuals={"skew": skew},
                    wall_time_s=clock["seconds"],
                )
