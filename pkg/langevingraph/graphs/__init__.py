"""
This module defines the experiment graphs of langevingraph.
"""

from .abstract_experiment import AbstractExperiment
from .aep_experiment import AepExperiment
from .base_graph import BaseGraph
from .bistable_experiment import BistableExperiment
from .limits_experiment import LimitsExperiment
from .lj_cool_experiment import LjCoolExperiment
from .ou_kl_experiment import OuKlExperiment
from .ratio_experiment import RatioExperiment

EXPERIMENT_GRAPHS = {
    graph.experiment: graph
    for graph in (
        OuKlExperiment,
        RatioExperiment,
        BistableExperiment,
        LjCoolExperiment,
        LimitsExperiment,
        AepExperiment,
    )
}

__all__ = [
    "AbstractExperiment",
    "BaseGraph",
    "OuKlExperiment",
    "RatioExperiment",
    "BistableExperiment",
    "LjCoolExperiment",
    "LimitsExperiment",
    "AepExperiment",
    "EXPERIMENT_GRAPHS",
]
