"""
Infinitesimal generator of the controlled dynamics and Monte-Carlo
stationarity checks.

For a smooth observable ``f(x, y)``::

    L f = y . grad_x f - grad V . grad_y f
          + 1/2 sigma sigma^T : hess_y f + (sigma B^T y - gamma y) . grad_y f

``exp(-beta H)`` is invariant iff ``E[L f] = 0`` under it for every ``f``;
the observables below make that testable with exact stationary samples.
"""

from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np
import scipy.linalg as sla

from ..integrators.noise import NoiseStream
from ..models.system import PhaseState, TwoTemperatureSystem
from ..utils.errors import DataError, DimensionError
from ..utils.linalg import check_spd


class Observable(ABC):
    """
    Observable ``f(x, y)`` with the derivatives the generator needs.

    All methods act on batches: ``x`` and ``y`` are ``(N, n)`` arrays.
    """

    @abstractmethod
    def value(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        pass

    def grad_x(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.zeros_like(x)

    def grad_y(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.zeros_like(y)

    def hess_y_trace(self, q: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """
        ``q : hess_y f`` for each row.
        """
        return np.zeros(x.shape[0])

    def __repr__(self) -> str:
        return type(self).__name__


def _unit(size: int, i: int) -> np.ndarray:
    e = np.zeros(size)
    e[i] = 1.0
    return e


class Constant(Observable):
    def __init__(self, c: float = 1.0):
        self.c = float(c)

    def value(self, x, y):
        return np.full(x.shape[0], self.c)


class CrossMoment(Observable):
    """``x_i y_j``"""

    def __init__(self, i: int, j: int):
        self.i, self.j = i, j

    def value(self, x, y):
        return x[:, self.i] * y[:, self.j]

    def grad_x(self, x, y):
        return np.outer(y[:, self.j], _unit(x.shape[1], self.i))

    def grad_y(self, x, y):
        return np.outer(x[:, self.i], _unit(y.shape[1], self.j))

    def __repr__(self) -> str:
        return f"CrossMoment({self.i}, {self.j})"


class SineX(Observable):
    """``sin(x_i)``"""

    def __init__(self, i: int):
        self.i = i

    def value(self, x, y):
        return np.sin(x[:, self.i])

    def grad_x(self, x, y):
        return np.outer(np.cos(x[:, self.i]), _unit(x.shape[1], self.i))

    def __repr__(self) -> str:
        return f"SineX({self.i})"


class VelocityComponent(Observable):
    """``y_i``"""

    def __init__(self, i: int):
        self.i = i

    def value(self, x, y):
        return y[:, self.i]

    def grad_y(self, x, y):
        return np.tile(_unit(y.shape[1], self.i), (y.shape[0], 1))

    def __repr__(self) -> str:
        return f"VelocityComponent({self.i})"


class VelocitySquare(Observable):
    """``y_i^2``"""

    def __init__(self, i: int):
        self.i = i

    def value(self, x, y):
        return y[:, self.i] ** 2

    def grad_y(self, x, y):
        return np.outer(2.0 * y[:, self.i], _unit(y.shape[1], self.i))

    def hess_y_trace(self, q, x, y):
        return np.full(x.shape[0], 2.0 * q[self.i, self.i])

    def __repr__(self) -> str:
        return f"VelocitySquare({self.i})"


class Hamiltonian(Observable):
    """``H(x, y) = |y|^2 / 2 + V(x)``"""

    def __init__(self, potential):
        self.potential = potential

    def value(self, x, y):
        v = np.array([self.potential.raw_energy(row) for row in x])
        return 0.5 * np.sum(y * y, axis=1) + v

    def grad_x(self, x, y):
        return self.potential.raw_gradient_batch(x)

    def grad_y(self, x, y):
        return y

    def hess_y_trace(self, q, x, y):
        return np.full(x.shape[0], float(np.trace(q)))


def _as_batch(a, n: int, name: str) -> np.ndarray:
    a = np.atleast_2d(np.asarray(a, dtype=float))
    if a.shape[1] != n:
        raise DimensionError(f"{name} has {a.shape[1]} columns, expected {n}")
    return a


def generator_values(
    system: TwoTemperatureSystem, potential, f: Observable, x, y
) -> np.ndarray:
    """
    ``(L f)`` at each row of ``(x, y)``.
    """
    n = system.dimension
    x = _as_batch(x, n, "x")
    y = _as_batch(y, n, "y")
    if x.shape != y.shape:
        raise DimensionError(f"x {x.shape} and y {y.shape} differ in shape")

    q = system.sigma @ system.sigma.T
    # rows of y @ (sigma B^T - gamma)^T are (sigma B^T - gamma) y
    friction_drift = y @ (system.sigma @ system.b.T - system.gamma).T
    force = potential.raw_gradient_batch(x)

    gx = f.grad_x(x, y)
    gy = f.grad_y(x, y)
    return (
        np.sum(y * gx, axis=1)
        - np.sum(force * gy, axis=1)
        + 0.5 * f.hess_y_trace(q, x, y)
        + np.sum(friction_drift * gy, axis=1)
    )


def generator_apply(
    system: TwoTemperatureSystem, potential, f: Observable, state: PhaseState
) -> float:
    """
    ``(L f)(x, y)`` at a single phase-space point.
    """
    return float(generator_values(system, potential, f, state.x, state.y)[0])


def stationary_samples(
    system: TwoTemperatureSystem, k_mat, n_samples: int, noise: NoiseStream
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Exact samples of ``exp(-beta H)`` for ``V(x) = x^T K x / 2``:
    ``x ~ N(0, K^-1 / beta)`` and ``y ~ N(0, I / beta)`` independently.

    Positions use the next ``n_samples`` vectors of ``noise`` and velocities
    the ``n_samples`` after them.

    Returns:
        tuple: ``(x, y)``, each of shape ``(n_samples, n)``.
    """
    k_mat = check_spd(k_mat, "k_mat")
    n = system.dimension
    if k_mat.shape != (n, n):
        raise DimensionError(f"k_mat has shape {k_mat.shape}, expected {(n, n)}")
    if n_samples < 2:
        raise DataError(f"need at least 2 samples, got {n_samples}")
    if noise.n != n:
        raise DimensionError(f"noise has dimension {noise.n}, expected {n}")

    scale = 1.0 / np.sqrt(system.beta)
    xi = noise.normals(n_samples) * scale
    y = noise.normals(n_samples) * scale
    # K = U^T U, so x = U^-1 xi has covariance K^-1
    upper = sla.cholesky(k_mat, lower=False)
    x = sla.solve_triangular(upper, xi.T, lower=False).T
    return x, y


def generator_expectation(
    system: TwoTemperatureSystem,
    potential,
    f: Observable,
    samples: Tuple[np.ndarray, np.ndarray],
) -> Tuple[float, float]:
    """
    Sample mean of ``L f`` and its standard error.
    """
    x, y = samples
    values = generator_values(system, potential, f, x, y)
    if values.shape[0] < 2:
        raise DataError("need at least 2 samples")
    return float(values.mean()), float(values.std(ddof=1) / np.sqrt(values.shape[0]))
