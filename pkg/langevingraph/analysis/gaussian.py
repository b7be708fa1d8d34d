"""
Gaussian laws of linear Langevin dynamics and their relative entropy.

For a linear SDE ``dZ = A Z dt + C dW`` started from ``N(m0, Sigma_0)`` the
law at time ``t`` is ``N(exp(At) m0, Sigma_t)`` with::

    Sigma_t = Sigma_inf + exp(At) (Sigma_0 - Sigma_inf) exp(A^T t)

The divergences below work with the covariance gap directly and with the
eigenvalues of the whitened gap, so that divergences far below machine
epsilon relative to the covariances themselves keep full relative accuracy.
"""

from typing import Optional

import numpy as np
import scipy.linalg as sla
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..models.system import TwoTemperatureSystem, effective_friction
from ..spectral.linear_model import DriftNoisePair
from ..utils.errors import DimensionError, DomainError
from ..utils.linalg import as_vector, check_spd, expm, symmetric_part
from .series import ScalarSeries

SERIES_CUTOFF = 1e-2
SERIES_TERMS = 8


class GaussianState(BaseModel):
    """
    ``N(mean, cov)`` on phase space.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    mean: np.ndarray
    cov: np.ndarray

    @field_validator("mean", mode="before")
    @classmethod
    def _mean(cls, value):
        return as_vector(value, "mean")

    @field_validator("cov", mode="before")
    @classmethod
    def _cov(cls, value):
        return check_spd(value, "cov")

    @model_validator(mode="after")
    def _sizes(self):
        if self.cov.shape[0] != self.mean.shape[0]:
            raise DimensionError(
                f"mean has length {self.mean.shape[0]}, cov is {self.cov.shape}"
            )
        return self

    @property
    def dimension(self) -> int:
        return self.mean.shape[0]

    @classmethod
    def centred(cls, cov) -> "GaussianState":
        cov = check_spd(cov, "cov")
        return cls(mean=np.zeros(cov.shape[0]), cov=cov)


def log1p_excess(delta) -> np.ndarray:
    """
    ``delta - log(1 + delta)`` elementwise, for ``delta > -1``.

    Small arguments use the alternating series
    ``delta^2/2 - delta^3/3 + ...`` to avoid cancellation.
    """
    delta = np.asarray(delta, dtype=float)
    out = np.empty_like(delta)
    small = np.abs(delta) < SERIES_CUTOFF

    d = delta[small]
    acc = np.zeros_like(d)
    power = d * d
    for k in range(2, SERIES_TERMS + 2):
        acc += (-1) ** k * power / k
        power = power * d
    out[small] = acc

    d = delta[~small]
    out[~small] = d - np.log1p(d)
    return out


def _whitened_eigenvalues(gap: np.ndarray, chol: np.ndarray) -> np.ndarray:
    w = sla.solve_triangular(chol, gap, lower=True)
    w = sla.solve_triangular(chol, w.T, lower=True)
    return sla.eigvalsh(symmetric_part(w))


def _mean_term(diff: np.ndarray, chol: np.ndarray) -> float:
    z = sla.solve_triangular(chol, diff, lower=True)
    return 0.5 * float(z @ z)


def _kl_from_gap(
    gap: np.ndarray, chol_ref: np.ndarray, mean_diff: Optional[np.ndarray] = None
) -> float:
    kl = 0.5 * float(np.sum(log1p_excess(_whitened_eigenvalues(gap, chol_ref))))
    if mean_diff is not None:
        kl += _mean_term(mean_diff, chol_ref)
    return max(kl, 0.0)


def gaussian_kl(eta: GaussianState, rho: GaussianState) -> float:
    """
    Relative entropy ``KL(eta | rho)`` of two Gaussians.

    ``1/2 (tr(S_eta S_rho^-1) - log det(S_eta S_rho^-1) - d + |m_rho - m_eta|^2_{S_rho^-1})``,
    evaluated as ``1/2 sum_i (delta_i - log(1 + delta_i))`` plus the mean
    term, where ``delta_i`` are the eigenvalues of the gap ``S_eta - S_rho``
    whitened by ``S_rho``.

    Raises:
        DimensionError: If the dimensions differ.
    """
    if eta.dimension != rho.dimension:
        raise DimensionError(
            f"cannot compare Gaussians of dimension {eta.dimension} and {rho.dimension}"
        )
    chol = sla.cholesky(rho.cov, lower=True)
    return _kl_from_gap(eta.cov - rho.cov, chol, rho.mean - eta.mean)


def _check_start(pair: DriftNoisePair, sigma0, mean0) -> tuple:
    size = 2 * pair.n
    sigma0 = check_spd(sigma0, "sigma0")
    if sigma0.shape != (size, size):
        raise DimensionError(f"sigma0 has shape {sigma0.shape}, expected {(size, size)}")
    mean0 = None if mean0 is None else as_vector(mean0, "mean0", size)
    return sigma0, mean0


def _propagator(pair: DriftNoisePair, t: float) -> np.ndarray:
    if t < 0.0:
        raise DomainError(f"time must be non-negative, got {t}")
    return expm(t * pair.a)


def propagate_covariance(
    pair: DriftNoisePair, sigma0, t: float, mean0=None
) -> GaussianState:
    """
    Law at time ``t`` of the linear SDE started from ``N(mean0, sigma0)``.

    Args:
        pair (DriftNoisePair): Hurwitz drift and noise.
        sigma0: SPD initial covariance (2n x 2n).
        t (float): Time, ``t >= 0``.
        mean0: Initial mean, zero when None.

    Raises:
        StabilityError: If the drift is not Hurwitz.
    """
    sigma0, mean0 = _check_start(pair, sigma0, mean0)
    sigma_inf = pair.stationary_covariance()
    e = _propagator(pair, t)
    cov = symmetric_part(sigma_inf + e @ (sigma0 - sigma_inf) @ e.T)
    mean = np.zeros(2 * pair.n) if mean0 is None else e @ mean0
    return GaussianState(mean=mean, cov=cov)


def kl_decay_curve(pair: DriftNoisePair, sigma0, times, mean0=None) -> ScalarSeries:
    """
    ``KL(rho_t | rho_inf)`` on a time grid.

    The gap ``exp(At)(Sigma_0 - Sigma_inf)exp(A^T t)`` is whitened by
    ``Sigma_inf`` once per grid point.
    """
    sigma0, mean0 = _check_start(pair, sigma0, mean0)
    times = as_vector(times, "times")
    sigma_inf = pair.stationary_covariance()
    chol = sla.cholesky(sigma_inf, lower=True)
    gap0 = sigma0 - sigma_inf

    values = np.empty_like(times)
    for i, t in enumerate(times):
        e = _propagator(pair, float(t))
        mean_t = None if mean0 is None else e @ mean0
        values[i] = _kl_from_gap(e @ gap0 @ e.T, chol, mean_t)
    return ScalarSeries(times=times, values=values)


def reverse_kl_curve(pair: DriftNoisePair, sigma0, times, mean0=None) -> ScalarSeries:
    """
    ``KL(rho_inf | rho_t)`` on a time grid; the reference law moves, so the
    whitening uses ``Sigma_t``.
    """
    sigma0, mean0 = _check_start(pair, sigma0, mean0)
    times = as_vector(times, "times")
    sigma_inf = pair.stationary_covariance()
    gap0 = sigma0 - sigma_inf

    values = np.empty_like(times)
    for i, t in enumerate(times):
        e = _propagator(pair, float(t))
        gap = symmetric_part(e @ gap0 @ e.T)
        chol = sla.cholesky(symmetric_part(sigma_inf + gap), lower=True)
        mean_t = None if mean0 is None else e @ mean0
        values[i] = _kl_from_gap(-gap, chol, mean_t)
    return ScalarSeries(times=times, values=values)


def controlled_linear_pair(system: TwoTemperatureSystem, k_mat) -> DriftNoisePair:
    """
    Phase-space drift and noise of the controlled dynamics for ``V = x^T K x / 2``::

        A = [[0, I], [-K, -(gamma - sigma B^T)]],   C = [[0], [sigma]]
    """
    k_mat = check_spd(k_mat, "k_mat")
    n = system.dimension
    if k_mat.shape != (n, n):
        raise DimensionError(f"k_mat has shape {k_mat.shape}, expected {(n, n)}")
    a = np.zeros((2 * n, 2 * n))
    a[:n, n:] = np.eye(n)
    a[n:, :n] = -k_mat
    a[n:, n:] = -effective_friction(system)
    c = np.zeros((2 * n, n))
    c[n:, :] = system.sigma
    return DriftNoisePair(a=a, c=c)
