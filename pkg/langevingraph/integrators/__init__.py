"""
__init__.py file for integrators folder
"""

from .baoab import (
    baoab_stationary_covariance,
    baoab_step,
    max_scaled_dt,
    ou_transition,
    simulate_controlled,
    simulate_scaled,
)
from .limits import euler_maruyama_overdamped, rk4_gradient_flow
from .noise import NoiseStream
from .trajectory import IntegratorSpec, Trajectory, write_trajectory_csv

__all__ = [
    "NoiseStream",
    "IntegratorSpec",
    "Trajectory",
    "write_trajectory_csv",
    "ou_transition",
    "baoab_step",
    "simulate_controlled",
    "simulate_scaled",
    "max_scaled_dt",
    "baoab_stationary_covariance",
    "euler_maruyama_overdamped",
    "rk4_gradient_flow",
]
