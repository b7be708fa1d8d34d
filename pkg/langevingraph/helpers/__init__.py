"""
This module provides helper functions and utilities for the langevingraph experiments.
"""

from .config_schemas import (
    PARAMS,
    AepParams,
    BistableParams,
    ExperimentConfig,
    LimitsParams,
    LjCoolParams,
    OuKlParams,
    RatioParams,
    load_config,
    translate_errors,
    validate_config,
)
from .experiment_defaults import experiment_defaults

__all__ = [
    "experiment_defaults",
    "ExperimentConfig",
    "PARAMS",
    "OuKlParams",
    "RatioParams",
    "BistableParams",
    "LjCoolParams",
    "LimitsParams",
    "AepParams",
    "load_config",
    "validate_config",
    "translate_errors",
]
