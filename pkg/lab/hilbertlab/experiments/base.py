"""
Base Experiment Class

All experiments inherit from this base class to get a consistent interface,
timing and logging around their checks.
"""

from abc import ABC, abstractmethod
from hashlib import sha1
from time import perf_counter
from typing import Dict, Iterator, List, Optional
from contextlib import contextmanager
import logging

import numpy as np
import orjson

from hilbertlab.schemas.experiment import ExperimentConfig, ResultRecord

logger = logging.getLogger(__name__)

# fields that do not change what is computed
_ID_EXCLUDED = ("output", "format")


def experiment_id(config: ExperimentConfig) -> str:
    """<subcommand>-<12 hex digits of the sha1 of the computational config>."""
    payload = {k: v for k, v in config.echo().items() if k not in _ID_EXCLUDED}
    digest = sha1(orjson.dumps(payload, option=orjson.OPT_SORT_KEYS)).hexdigest()[:12]
    return f"{config.subcommand}-{digest}"


class BaseExperiment(ABC):
    """
    Abstract base class for every CLI experiment.

    Each experiment must implement execute(), which returns one record per checked case.
    """

    name: str = "experiment"

    def __init__(self, config: ExperimentConfig, progress: bool = False):
        """
        Initialize the experiment.

        Args:
            config: Fully resolved configuration
            progress: Show tqdm progress bars in long loops
        """
        self.config = config
        self.progress = progress
        self.experiment_id = experiment_id(config)
        self.params = config.echo()
        self.execution_count = 0
        self._records: List[ResultRecord] = []

    @abstractmethod
    def execute(self) -> None:
        """Run every case, adding records through self.record()."""
        pass

    def rng(self, stream: int) -> np.random.Generator:
        """Independent generator for trial `stream`, derived from the config seed."""
        return np.random.default_rng(np.random.SeedSequence([self.config.seed, stream]))

    @contextmanager
    def timed(self) -> Iterator[Dict[str, float]]:
        """Measure wall time of a block into the yielded dict under 'seconds'."""
        clock = {"seconds": 0.0}
        start = perf_counter()
        try:
            yield clock
        finally:
            clock["seconds"] = perf_counter() - start

    def record(
        self,
        case: str,
        values: Optional[Dict[str, float]] = None,
        residuals: Optional[Dict[str, float]] = None,
        flags: Optional[Dict[str, bool]] = None,
        passed: bool = True,
        wall_time_s: float = 0.0,
    ) -> ResultRecord:
        record = ResultRecord(
            experiment_id=self.experiment_id,
            subcommand=self.config.subcommand,
            case=case,
            params=self.params,
            values={k: float(v) for k, v in (values or {}).items()},
            residuals={k: float(v) for k, v in (residuals or {}).items()},
            flags={k: bool(v) for k, v in (flags or {}).items()},
            passed=bool(passed),
            wall_time_s=wall_time_s,
        )
        if not record.passed:
            logger.warning(f"⚠️ {self.name}: case '{case}' did not pass")
        self._records.append(record)
        return record

    def run(self) -> List[ResultRecord]:
        """
        Wrapper around execute() that adds timing and logging.

        Returns:
            Records in the order the cases ran
        """
        self._records = []
        self.execution_count += 1
        start = perf_counter()
        logger.info(f"{self.name} started ({self.experiment_id})")
        try:
            self.execute()
        except Exception as e:
            logger.error(f"{self.name} failed after {perf_counter() - start:.2f}s: {e}")
            raise
        failed = sum(1 for r in self._records if not r.passed)
        logger.info(
            f"✅ {self.name} completed in {perf_counter() - start:.2f}s: "
            f"{len(self._records)} cases, {failed} failed"
        )
        return list(self._records)

    @property
    def records(self) -> List[ResultRecord]:
        return list(self._records)
