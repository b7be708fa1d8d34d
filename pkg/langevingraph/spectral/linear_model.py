"""
Linear (Gaussian) case of the controlled dynamics.

For ``V(x) = x^T K x / 2`` and the optimal control, the phase-space process
is an Ornstein-Uhlenbeck process ``dZ = A Z dt + C dW`` with::

    A = [[0, I], [-K, -alpha gamma]],   C = [[0], [sqrt(2 / beta_bar) gamma^(1/2)]]

where ``alpha = beta / beta_bar``. The drift depends on ``alpha`` only.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..utils.errors import DimensionError, StabilityError
from ..utils.linalg import (
    as_matrix,
    check_spd,
    eigenvalues,
    solve_lyapunov,
    spectral_abscissa,
    sqrtm_spd,
)


class LinearTemplate(BaseModel):
    """
    Stiffness, friction and target temperature with the ratio left open.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k_mat: np.ndarray
    gamma: np.ndarray
    beta: float = Field(default=1.0, gt=0.0)

    @field_validator("k_mat", "gamma", mode="before")
    @classmethod
    def _spd(cls, value, info):
        return check_spd(value, info.field_name)

    @model_validator(mode="after")
    def _same_size(self):
        if self.k_mat.shape != self.gamma.shape:
            raise DimensionError(
                f"k_mat {self.k_mat.shape} and gamma {self.gamma.shape} differ in size"
            )
        return self

    @property
    def dimension(self) -> int:
        return self.k_mat.shape[0]

    def at(self, alpha: float) -> "LinearModel":
        return LinearModel(k_mat=self.k_mat, gamma=self.gamma, alpha=alpha, beta=self.beta)

    def drift(self, alpha: float) -> np.ndarray:
        """
        ``A(alpha)`` without re-validating the matrices.
        """
        n = self.dimension
        a = np.zeros((2 * n, 2 * n))
        a[:n, n:] = np.eye(n)
        a[n:, :n] = -self.k_mat
        a[n:, n:] = -alpha * self.gamma
        return a


class LinearModel(LinearTemplate):
    """
    ``(K, gamma, alpha, beta)``: a :class:`LinearTemplate` with the ratio fixed.
    """

    alpha: float = Field(gt=0.0)

    @property
    def beta_bar(self) -> float:
        return self.beta / self.alpha

    def template(self) -> LinearTemplate:
        return LinearTemplate(k_mat=self.k_mat, gamma=self.gamma, beta=self.beta)


class DriftNoisePair(BaseModel):
    """
    Drift ``a`` (2n x 2n) and noise ``c`` (2n x n) of a linear SDE.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: np.ndarray
    c: np.ndarray

    @field_validator("a", mode="before")
    @classmethod
    def _square(cls, value):
        return as_matrix(value, "a")

    @field_validator("c", mode="before")
    @classmethod
    def _noise(cls, value):
        return as_matrix(value, "c", square=False)

    @model_validator(mode="after")
    def _shapes(self):
        if self.a.shape[0] % 2 or self.c.shape != (self.a.shape[0], self.a.shape[0] // 2):
            raise DimensionError(
                f"expected a 2n x 2n drift and 2n x n noise, got {self.a.shape} and {self.c.shape}"
            )
        return self

    @property
    def n(self) -> int:
        return self.a.shape[0] // 2

    @property
    def diffusion(self) -> np.ndarray:
        """``C C^T``"""
        return self.c @ self.c.T

    def stationary_covariance(self) -> np.ndarray:
        """
        ``Sigma_inf`` solving ``A X + X A^T + C C^T = 0``.
        """
        return solve_lyapunov(self.a, self.diffusion)


def assemble(model: LinearModel) -> DriftNoisePair:
    """
    Drift and noise matrices of the linear model.

    Raises:
        StabilityError: If the assembled drift is not Hurwitz.
    """
    n = model.dimension
    a = model.drift(model.alpha)
    c = np.zeros((2 * n, n))
    c[n:, :] = np.sqrt(2.0 / model.beta_bar) * sqrtm_spd(model.gamma)

    abscissa = spectral_abscissa(a)
    if abscissa >= 0.0:
        raise StabilityError(f"assembled drift is not Hurwitz (abscissa {abscissa:.6g})")
    return DriftNoisePair(a=a, c=c)


def decay_rate(pair: DriftNoisePair) -> float:
    """
    Exponential convergence rate ``2r`` with ``-r`` the spectral abscissa of A.

    Raises:
        StabilityError: If ``pair.a`` is not Hurwitz.
    """
    abscissa = spectral_abscissa(pair.a)
    if abscissa >= 0.0:
        raise StabilityError(f"drift is not Hurwitz (abscissa {abscissa:.6g})")
    return -2.0 * abscissa


def trace_rate_bound(pair: DriftNoisePair) -> float:
    """
    ``-tr(A) / n``: the rate all eigenvalues would share if their real parts
    were equal, an upper bound on :func:`decay_rate`.
    """
    return -float(np.trace(pair.a)) / pair.n


def spectrum(pair: DriftNoisePair) -> np.ndarray:
    return eigenvalues(pair.a)
