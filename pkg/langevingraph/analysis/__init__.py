"""
__init__.py file for analysis folder
"""

from .entropy import FIRReport, aep_rate_monte_carlo, fir_check
from .gaussian import (
    GaussianState,
    controlled_linear_pair,
    gaussian_kl,
    kl_decay_curve,
    log1p_excess,
    propagate_covariance,
    reverse_kl_curve,
)
from .generator import (
    Constant,
    CrossMoment,
    Hamiltonian,
    Observable,
    SineX,
    VelocityComponent,
    VelocitySquare,
    generator_apply,
    generator_expectation,
    generator_values,
    stationary_samples,
)
from .series import (
    RateFit,
    ScalarSeries,
    autocorrelation,
    batch_means,
    count_transitions,
    eps_scaling_slope,
    fit_exponential_rate,
    histogram_marginal,
    well_balance,
)

__all__ = [
    "GaussianState",
    "gaussian_kl",
    "log1p_excess",
    "propagate_covariance",
    "kl_decay_curve",
    "reverse_kl_curve",
    "controlled_linear_pair",
    "Observable",
    "Constant",
    "CrossMoment",
    "SineX",
    "VelocityComponent",
    "VelocitySquare",
    "Hamiltonian",
    "generator_apply",
    "generator_values",
    "generator_expectation",
    "stationary_samples",
    "FIRReport",
    "aep_rate_monte_carlo",
    "fir_check",
    "RateFit",
    "ScalarSeries",
    "fit_exponential_rate",
    "autocorrelation",
    "histogram_marginal",
    "eps_scaling_slope",
    "batch_means",
    "count_transitions",
    "well_balance",
]
