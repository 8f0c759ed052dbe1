"""
Experiments package - one experiment per CLI subcommand.
"""

from hilbertlab.experiments.base import BaseExperiment, experiment_id
from hilbertlab.experiments.distribution import DistributionExperiment
from hilbertlab.experiments.factory import ExperimentFactory
from hilbertlab.experiments.lemma import LemmaExperiment
from hilbertlab.experiments.materialize import MaterializeExperiment
from hilbertlab.experiments.modulation import ModulationExperiment
from hilbertlab.experiments.norms import NormsExperiment
from hilbertlab.experiments.weak_form import WeakFormExperiment

__all__ = [
    "BaseExperiment",
    "experiment_id",
    "ExperimentFactory",
    "LemmaExperiment",
    "WeakFormExperiment",
    "ModulationExperiment",
    "DistributionExperiment",
    "NormsExperiment",
    "MaterializeExperiment",
]
