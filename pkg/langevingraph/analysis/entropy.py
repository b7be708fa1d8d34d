"""
Entropy production of the controlled dynamics in the Gaussian case.
"""

from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.integrate import cumulative_trapezoid

from ..integrators.noise import NoiseStream
from ..models.potentials import Quadratic
from ..models.system import TwoTemperatureSystem, aep_integrand, aep_rate
from ..utils.errors import DataError, DimensionError, ScopeError
from ..utils.logging import get_logger
from .gaussian import controlled_linear_pair, reverse_kl_curve

logger = get_logger(__name__)

FIR_TOL = 1e-9


def aep_rate_monte_carlo(
    system: TwoTemperatureSystem, n_samples: int, noise: NoiseStream
) -> Tuple[float, float]:
    """
    Monte-Carlo estimate of the asymptotic entropy production rate.

    Averages the AEP integrand over ``y ~ N(0, I / beta)``, taking the
    velocities from the next ``n_samples`` vectors of ``noise``.

    Returns:
        tuple: ``(mean, stderr)``.
    """
    if n_samples < 2:
        raise DataError(f"need at least 2 samples, got {n_samples}")
    if noise.n != system.dimension:
        raise DimensionError(
            f"noise has dimension {noise.n}, the system has {system.dimension}"
        )
    y = noise.normals(n_samples) / np.sqrt(system.beta)
    values = aep_integrand(system, y)
    return float(values.mean()), float(values.std(ddof=1) / np.sqrt(n_samples))


class FIRReport(BaseModel):
    """
    Outcome of :func:`fir_check`.

    Attributes:
        times: Time grid.
        kl: ``KL(rho_inf | rho_t)`` on the grid.
        bound: Integrated entropy production ``int_0^t R(B) ds``.
        rate: ``R(B)``.
        tolerance: Allowed excess of ``kl - kl[0]`` over ``bound``.
        monotone: Whether ``kl`` is non-increasing within ``1e-9`` per step;
            only checked (not None) when ``R(B) = 0``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    times: np.ndarray
    kl: np.ndarray
    bound: np.ndarray
    rate: float
    tolerance: float
    monotone: Optional[bool] = None

    @property
    def slack(self) -> np.ndarray:
        return self.bound - (self.kl - self.kl[0])

    @property
    def max_violation(self) -> float:
        return float(max(0.0, -np.min(self.slack)))

    @property
    def passed(self) -> bool:
        return self.max_violation <= self.tolerance and self.monotone is not False

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_rows(self) -> np.ndarray:
        return np.column_stack([self.times, self.kl, self.bound, self.slack])


def fir_check(
    system: TwoTemperatureSystem,
    potential,
    sigma0,
    times,
    mean0=None,
) -> FIRReport:
    """
    Check the integrated entropy-production inequality along the controlled
    evolution of a Gaussian initial law.

    ``KL(rho_inf | rho_t) - KL(rho_inf | rho_0) <= t R(B)`` is tested at every
    grid point, the right side integrated with the trapezoidal rule. For the
    optimal control (``R = 0``) the divergence must also be non-increasing.

    Args:
        system (TwoTemperatureSystem): Admissible system.
        potential (Quadratic): Only quadratic potentials keep every law Gaussian.
        sigma0: SPD initial covariance on phase space.
        times: Increasing time grid.
        mean0: Initial mean, zero when None.

    Raises:
        ScopeError: If the potential is not quadratic.
    """
    if not isinstance(potential, Quadratic):
        raise ScopeError(
            f"fir_check needs a quadratic potential, got '{getattr(potential, 'kind', potential)}'"
        )
    system.check_potential(potential)

    pair = controlled_linear_pair(system, potential.k_mat)
    curve = reverse_kl_curve(pair, sigma0, times, mean0)
    rate = aep_rate(system)
    t, kl = curve.times, curve.values
    bound = cumulative_trapezoid(np.full_like(t, rate), t, initial=0.0)

    curvature = 0.0
    if t.shape[0] >= 3:
        h = float(np.max(np.diff(t)))
        second = np.gradient(np.gradient(kl, t), t)
        curvature = h * h * float(np.max(np.abs(second)))
    tolerance = FIR_TOL + curvature

    monotone = None
    if rate <= 1e-14:
        monotone = bool(np.all(np.diff(kl) <= FIR_TOL))

    report = FIRReport(
        times=t, kl=kl, bound=bound, rate=rate, tolerance=tolerance, monotone=monotone
    )
    logger.info(
        f"FIR check: R(B)={rate:.6g}, max violation {report.max_violation:.3e}, "
        f"{report.verdict}"
    )
    return report
