"""
__init__.py file for models folder
"""

from .potentials import (
    DoubleWell,
    LennardJones,
    PotentialModel,
    Quadratic,
    energy,
    gradient,
)
from .system import (
    PhaseState,
    TwoTemperatureSystem,
    aep_integrand,
    aep_rate,
    build_control,
    control_defect,
    effective_friction,
    fdr2_residual,
    fdr_noise,
    hamiltonian,
    optimal_control,
    random_skew,
)

__all__ = [
    "DoubleWell",
    "LennardJones",
    "PotentialModel",
    "Quadratic",
    "energy",
    "gradient",
    "PhaseState",
    "TwoTemperatureSystem",
    "aep_integrand",
    "aep_rate",
    "build_control",
    "control_defect",
    "effective_friction",
    "fdr2_residual",
    "fdr_noise",
    "hamiltonian",
    "optimal_control",
    "random_skew",
]
