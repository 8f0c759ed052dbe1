"""
Experiment factory for creating experiment instances.

Centralized registry mapping CLI subcommands to experiment classes.
"""

import logging
from typing import Dict, List, Type

from hilbertlab.experiments.base import BaseExperiment
from hilbertlab.experiments.distribution import DistributionExperiment
from hilbertlab.experiments.lemma import LemmaExperiment
from hilbertlab.experiments.materialize import MaterializeExperiment
from hilbertlab.experiments.modulation import ModulationExperiment
from hilbertlab.experiments.norms import NormsExperiment
from hilbertlab.experiments.weak_form import WeakFormExperiment
from hilbertlab.schemas.experiment import ExperimentConfig

logger = logging.getLogger(__name__)


class ExperimentFactory:
    """
    Factory for creating experiment instances.

    Maintains a registry of all subcommands and handles instantiation.
    """

    # Registry of experiment classes
    _experiments: Dict[str, Type[BaseExperiment]] = {
        "verify-lemma": LemmaExperiment,
        "verify-weak-form": WeakFormExperiment,
        "verify-modulation": ModulationExperiment,
        "verify-distribution": DistributionExperiment,
        "estimate-norms": NormsExperiment,
        "materialize": MaterializeExperiment,
    }

    @classmethod
    def create(cls, config: ExperimentConfig, progress: bool = False) -> BaseExperiment:
        """
        Instantiate the experiment for config.subcommand.

        Raises:
            ValueError: If no experiment is registered for the subcommand
        """
        experiment_class = cls._experiments.get(config.subcommand)
        if experiment_class is None:
            available = ", ".join(cls._experiments.keys())
            raise ValueError(
                f"Unknown experiment: '{config.subcommand}'. "
                f"Available experiments: {available}"
            )
        return experiment_class(config, progress=progress)

    @classmethod
    def register_experiment(cls, name: str, experiment_class: Type[BaseExperiment]):
        """
        Register a new experiment class.

        Args:
            name: Subcommand name
            experiment_class: Experiment class (must extend BaseExperiment)
        """
        if not issubclass(experiment_class, BaseExperiment):
            raise ValueError(
                f"Experiment class must extend BaseExperiment, "
                f"got {experiment_class.__name__}"
            )
        cls._experiments[name] = experiment_class
        logger.info(f"✅ Registered experiment: {name}")

    @classmethod
    def list_experiments(cls) -> List[str]:
        return list(cls._experiments.keys())
