"""
Two-temperature Langevin system and its feedback controls.

The controlled dynamics is::

    dX = Y dt
    dY = (sigma B^T Y - grad V(X) - gamma Y) dt + sigma dW

with noise injected at the simulation temperature ``1/beta_bar``
(``2 gamma = beta_bar sigma sigma^T``) while the control ``u = B^T Y`` keeps
``exp(-beta H)`` invariant, which holds exactly when
``B sigma^T + sigma B^T = (beta_bar - beta) sigma sigma^T``.
"""

from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..utils.errors import DimensionError, SingularityError, ValidationError
from ..utils.linalg import (
    as_matrix,
    as_vector,
    check_spd,
    is_skew_symmetric,
    sqrtm_spd,
)
from .potentials import check_dimension

FDR_TOL = 1e-10


def _scale(mat: np.ndarray) -> float:
    return max(1.0, float(np.linalg.norm(mat)))


def _check_sigma(sigma) -> np.ndarray:
    sigma = as_matrix(sigma, "sigma")
    if np.linalg.cond(sigma) > 1e12:
        raise SingularityError("sigma is singular")
    return sigma


class PhaseState(BaseModel):
    """
    Point ``(x, y)`` of phase space.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x: np.ndarray
    y: np.ndarray

    @field_validator("x", "y", mode="before")
    @classmethod
    def _finite_vector(cls, value):
        return as_vector(value)

    @model_validator(mode="after")
    def _same_length(self):
        if self.x.shape != self.y.shape:
            raise DimensionError(
                f"x has length {self.x.shape[0]}, y has length {self.y.shape[0]}"
            )
        return self

    @property
    def dimension(self) -> int:
        return self.x.shape[0]

    @classmethod
    def at_rest(cls, x) -> "PhaseState":
        x = as_vector(x, "x")
        return cls(x=x, y=np.zeros_like(x))


class TwoTemperatureSystem(BaseModel):
    """
    Coefficients of the controlled Langevin equation.

    Attributes:
        gamma (np.ndarray): SPD friction matrix.
        sigma (np.ndarray): Invertible noise matrix, ``sigma sigma^T = 2 gamma / beta_bar``.
        beta_bar (float): Inverse simulation temperature.
        beta (float): Inverse target temperature.
        b (np.ndarray): Control matrix; the feedback is ``u = B^T y``.

    Construction validates both fluctuation-dissipation relations. Use
    ``model_construct`` to build an unchecked (inadmissible) system, e.g. to
    show that stationarity tests reject it.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    gamma: np.ndarray
    sigma: np.ndarray
    beta_bar: float = Field(gt=0.0)
    beta: float = Field(gt=0.0)
    b: np.ndarray

    @field_validator("gamma", mode="before")
    @classmethod
    def _spd_friction(cls, value):
        return check_spd(value, "gamma")

    @field_validator("sigma", mode="before")
    @classmethod
    def _invertible_noise(cls, value):
        return _check_sigma(value)

    @field_validator("b", mode="before")
    @classmethod
    def _control(cls, value):
        return as_matrix(value, "b")

    @model_validator(mode="after")
    def _admissible(self):
        n = self.gamma.shape[0]
        if self.sigma.shape != (n, n) or self.b.shape != (n, n):
            raise DimensionError(
                f"gamma, sigma and b must all be {n}x{n}, got "
                f"{self.sigma.shape} and {self.b.shape}"
            )
        sst = self.diffusion
        fdr = float(np.linalg.norm(2.0 * self.gamma - self.beta_bar * sst))
        if fdr > FDR_TOL * _scale(self.gamma):
            raise ValidationError(
                f"fluctuation-dissipation relation 2 gamma = beta_bar sigma sigma^T "
                f"violated (residual {fdr:.3e})"
            )
        fdr2 = fdr2_residual(self.sigma, self.beta_bar, self.beta, self.b)
        if fdr2 > FDR_TOL * _scale(sst):
            raise ValidationError(
                f"control is not admissible: B sigma^T + sigma B^T != "
                f"(beta_bar - beta) sigma sigma^T (residual {fdr2:.3e})"
            )
        return self

    @property
    def dimension(self) -> int:
        return self.gamma.shape[0]

    @property
    def diffusion(self) -> np.ndarray:
        """``sigma sigma^T``"""
        return self.sigma @ self.sigma.T

    @property
    def ratio(self) -> float:
        """Temperature ratio ``beta / beta_bar``."""
        return self.beta / self.beta_bar

    @classmethod
    def from_friction(
        cls,
        gamma,
        beta_bar: float,
        beta: float,
        m: Optional[np.ndarray] = None,
    ) -> "TwoTemperatureSystem":
        """
        Build a system from the friction alone.

        The noise is the symmetric root ``sqrt(2 gamma / beta_bar)`` and the
        control is ``B* + sigma M`` (``B*`` when ``m`` is None).
        """
        sigma = fdr_noise(gamma, beta_bar)
        if m is None:
            b = optimal_control(sigma, beta_bar, beta)
        else:
            b = build_control(sigma, beta_bar, beta, m)
        return cls(gamma=gamma, sigma=sigma, beta_bar=beta_bar, beta=beta, b=b)

    def check_potential(self, potential) -> None:
        check_dimension(potential, self.dimension)


def fdr2_residual(sigma: np.ndarray, beta_bar: float, beta: float, b: np.ndarray) -> float:
    """
    Frobenius norm of ``B sigma^T + sigma B^T - (beta_bar - beta) sigma sigma^T``.
    """
    sst = sigma @ sigma.T
    return float(np.linalg.norm(b @ sigma.T + sigma @ b.T - (beta_bar - beta) * sst))


def fdr_noise(gamma, beta_bar: float) -> np.ndarray:
    """
    Symmetric noise matrix ``sigma = sqrt(2 gamma / beta_bar)``.
    """
    if beta_bar <= 0.0:
        raise ValidationError(f"beta_bar must be positive, got {beta_bar}")
    gamma = check_spd(gamma, "gamma")
    return sqrtm_spd(2.0 * gamma / beta_bar)


def build_control(sigma, beta_bar: float, beta: float, m) -> np.ndarray:
    """
    Admissible control ``B = (beta_bar - beta) sigma / 2 + sigma M``.

    Args:
        sigma: Invertible noise matrix.
        beta_bar (float): Inverse simulation temperature.
        beta (float): Inverse target temperature.
        m: Skew-symmetric matrix parametrising the admissible set.

    Raises:
        ValidationError: If ``m`` is not skew-symmetric.
        SingularityError: If ``sigma`` is singular.
    """
    sigma = _check_sigma(sigma)
    m = as_matrix(m, "m")
    if m.shape != sigma.shape:
        raise DimensionError(f"m has shape {m.shape}, expected {sigma.shape}")
    if not is_skew_symmetric(m):
        raise ValidationError("m must be skew-symmetric")
    return 0.5 * (beta_bar - beta) * sigma + sigma @ m


def optimal_control(sigma, beta_bar: float, beta: float) -> np.ndarray:
    """
    Minimum-dissipation control ``B* = (beta_bar - beta) sigma / 2``.
    """
    sigma = _check_sigma(sigma)
    return 0.5 * (beta_bar - beta) * sigma


def effective_friction(system: TwoTemperatureSystem) -> np.ndarray:
    """
    ``F = gamma - sigma B^T``, the friction felt by the velocities.

    Equals ``(beta / beta_bar) gamma`` for the optimal control.
    """
    return system.gamma - system.sigma @ system.b.T


def control_defect(system: TwoTemperatureSystem) -> np.ndarray:
    """
    ``Q = sigma B^T - (beta_bar - beta) sigma sigma^T / 2``; zero iff ``B = B*``.
    """
    return system.sigma @ system.b.T - 0.5 * (
        system.beta_bar - system.beta
    ) * system.diffusion


def aep_integrand(system: TwoTemperatureSystem, y: np.ndarray) -> np.ndarray:
    """
    ``|Q y|^2_{(sigma sigma^T)^-1} / 2`` for each row of ``y``.
    """
    y = np.atleast_2d(y)
    z = np.linalg.solve(system.sigma, control_defect(system) @ y.T)
    return 0.5 * np.sum(z * z, axis=0)


def aep_rate(system: TwoTemperatureSystem) -> float:
    """
    Asymptotic entropy production rate of an admissible system.

    The expectation of :func:`aep_integrand` over ``y ~ N(0, I / beta)`` in
    closed form::

        R(B) = tr(Q^T (sigma sigma^T)^-1 Q) / (2 beta)

    Returns:
        float: ``R(B) >= 0``, zero for ``B = B*``.
    """
    q = control_defect(system)
    z = np.linalg.solve(system.sigma, q)
    return float(np.sum(z * z)) / (2.0 * system.beta)


def random_skew(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    a = rng.normal(0.0, scale, size=(n, n))
    return 0.5 * (a - a.T)


def hamiltonian(potential, state: PhaseState) -> float:
    """
    ``H(x, y) = |y|^2 / 2 + V(x)``
    """
    return 0.5 * float(state.y @ state.y) + potential.energy(state.x)
