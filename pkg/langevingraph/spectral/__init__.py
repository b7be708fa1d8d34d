"""
__init__.py file for spectral folder
"""

from .linear_model import (
    DriftNoisePair,
    LinearModel,
    LinearTemplate,
    assemble,
    decay_rate,
    spectrum,
    trace_rate_bound,
)
from .ratio import (
    abscissa_scan,
    commutes,
    diagonalize_commuting,
    eigenvalues_at,
    optimal_ratio_1d,
    optimal_ratio_commuting,
    optimal_ratio_search,
)

__all__ = [
    "DriftNoisePair",
    "LinearModel",
    "LinearTemplate",
    "assemble",
    "decay_rate",
    "spectrum",
    "trace_rate_bound",
    "abscissa_scan",
    "commutes",
    "diagonalize_commuting",
    "eigenvalues_at",
    "optimal_ratio_1d",
    "optimal_ratio_commuting",
    "optimal_ratio_search",
]
