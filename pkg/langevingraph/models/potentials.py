"""
Potential energy models.

Three variants share one interface (``dimension``, ``energy``, ``gradient``)
and form the discriminated union :data:`PotentialModel`, selected by the
``kind`` field so they can be read straight from an experiment config.
"""

from typing import Annotated, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..utils.errors import DimensionError, SingularityError
from ..utils.linalg import as_vector, check_spd

MIN_PAIR_DISTANCE = 1e-12


class _Potential(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True, extra="forbid")

    @property
    def dimension(self) -> int:
        raise NotImplementedError

    def _position(self, x) -> np.ndarray:
        return as_vector(x, "x", self.dimension)

    def energy(self, x) -> float:
        return self.raw_energy(self._position(x))

    def gradient(self, x) -> np.ndarray:
        return self.raw_gradient(self._position(x))

    def raw_energy(self, x: np.ndarray) -> float:
        """
        Energy of an already validated position vector; used by integrators.
        """
        raise NotImplementedError

    def raw_gradient(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def raw_gradient_batch(self, xs: np.ndarray) -> np.ndarray:
        """
        Gradients of the rows of ``xs``.
        """
        return np.array([self.raw_gradient(x) for x in xs])


class Quadratic(_Potential):
    """
    ``V(x) = x^T K x / 2`` with a symmetric positive-definite stiffness ``K``.
    """

    kind: Literal["quadratic"] = "quadratic"
    k_mat: np.ndarray

    @field_validator("k_mat", mode="before")
    @classmethod
    def _spd_stiffness(cls, value):
        return check_spd(value, "k_mat")

    @property
    def dimension(self) -> int:
        return self.k_mat.shape[0]

    def raw_energy(self, x: np.ndarray) -> float:
        return 0.5 * float(x @ self.k_mat @ x)

    def raw_gradient(self, x: np.ndarray) -> np.ndarray:
        return self.k_mat @ x

    def raw_gradient_batch(self, xs: np.ndarray) -> np.ndarray:
        return xs @ self.k_mat


class DoubleWell(_Potential):
    """
    Coupled double well on ``x = (q, xi_1, ..., xi_d)``::

        V(x) = (q^2 - 1)^2 / 2 + k/2 * sum_i (xi_i - q)^2

    The two global minima ``x = +-(1, ..., 1)`` have zero energy.
    """

    kind: Literal["double_well"] = "double_well"
    d: int = Field(ge=0)
    k: float = Field(default=1.0, gt=0.0)

    @property
    def dimension(self) -> int:
        return self.d + 1

    def raw_energy(self, x: np.ndarray) -> float:
        q, xi = x[0], x[1:]
        return 0.5 * (q * q - 1.0) ** 2 + 0.5 * self.k * float(np.sum((xi - q) ** 2))

    def raw_gradient(self, x: np.ndarray) -> np.ndarray:
        q, xi = x[0], x[1:]
        g = np.empty_like(x)
        g[0] = 2.0 * q * (q * q - 1.0) - self.k * float(np.sum(xi - q))
        g[1:] = self.k * (xi - q)
        return g


class LennardJones(_Potential):
    """
    Lennard-Jones cluster of ``n_particles`` in ``dim`` space dimensions.

    ``V`` is the sum over pairs of ``4 eps [(sig/r)^12 - (sig/r)^6]``, with
    no cutoff and no periodic images. Positions are flattened particle by
    particle, ``x = (x^(1), ..., x^(N))``.

    With ``container_radius`` set, each particle further than that from the
    centroid feels ``container_stiffness / 2 * (|x^(i) - centroid| - radius)^2``.
    The wall is flat inside the radius, so compact minima are unchanged, and
    it keeps a hot cluster from evaporating.
    """

    kind: Literal["lennard_jones"] = "lennard_jones"
    n_particles: int = Field(ge=2)
    dim: Literal[1, 2, 3] = 2
    eps: float = Field(default=1.0, gt=0.0)
    sig: float = Field(default=1.0, gt=0.0)
    container_radius: Optional[float] = Field(default=None, gt=0.0)
    container_stiffness: float = Field(default=10.0, gt=0.0)

    @property
    def dimension(self) -> int:
        return self.n_particles * self.dim

    @property
    def pair_minimum_distance(self) -> float:
        return 2.0 ** (1.0 / 6.0) * self.sig

    def _pairs(self, x: np.ndarray):
        pos = x.reshape(self.n_particles, self.dim)
        diffs = pos[:, None, :] - pos[None, :, :]
        r = np.sqrt(np.sum(diffs * diffs, axis=-1))
        np.fill_diagonal(r, np.inf)
        r_min = float(np.min(r))
        if r_min < MIN_PAIR_DISTANCE * self.sig:
            i, j = np.unravel_index(int(np.argmin(r)), r.shape)
            raise SingularityError(
                f"particles {i} and {j} coincide (distance {r_min:.3e})"
            )
        return diffs, r

    def pair_distances(self, x) -> np.ndarray:
        """
        Distances ``r_ij`` for ``i < j`` in row-major pair order.
        """
        _, r = self._pairs(self._position(x))
        iu = np.triu_indices(self.n_particles, k=1)
        return r[iu]

    def _wall(self, x: np.ndarray):
        pos = x.reshape(self.n_particles, self.dim)
        offsets = pos - pos.mean(axis=0)
        dist = np.sqrt(np.sum(offsets * offsets, axis=1))
        excess = np.maximum(dist - self.container_radius, 0.0)
        return offsets, dist, excess

    def pair_energy(self, x) -> float:
        """
        Lennard-Jones energy alone, without the container term.
        """
        _, r = self._pairs(self._position(x))
        s6 = (self.sig / r) ** 6
        # each pair appears twice in the full matrix
        return 2.0 * self.eps * float(np.sum(s6 * s6 - s6))

    def wall_energy(self, x) -> float:
        if self.container_radius is None:
            return 0.0
        _, _, excess = self._wall(self._position(x))
        return 0.5 * self.container_stiffness * float(excess @ excess)

    def raw_energy(self, x: np.ndarray) -> float:
        return self.pair_energy(x) + self.wall_energy(x)

    def raw_gradient(self, x: np.ndarray) -> np.ndarray:
        diffs, r = self._pairs(x)
        s6 = (self.sig / r) ** 6
        # dv/dr divided by r; the diagonal is zero because r is inf there
        coef = -24.0 * self.eps * (2.0 * s6 * s6 - s6) / (r * r)
        g = np.einsum("ij,ijk->ik", coef, diffs)
        if self.container_radius is not None:
            offsets, dist, excess = self._wall(x)
            if np.any(excess > 0.0):
                push = (self.container_stiffness * excess / np.maximum(dist, 1e-300))[:, None] * offsets
                # the centroid moves with every particle
                g += push - push.mean(axis=0)
        return g.reshape(-1)

    def lattice_configuration(
        self,
        spacing: Optional[float] = None,
        jitter: float = 0.1,
        rng: Optional[np.random.Generator] = None,
    ) -> np.ndarray:
        """
        High-energy start: particles on a square/cubic grid perturbed by
        Gaussian noise.

        Args:
            spacing (Optional[float]): Grid spacing, ``2 * sig`` by default.
            jitter (float): Standard deviation of the perturbation.
            rng (Optional[np.random.Generator]): Source of the perturbation;
                no perturbation when None.

        Returns:
            np.ndarray: Flattened positions of length ``n_particles * dim``.
        """
        spacing = 2.0 * self.sig if spacing is None else spacing
        side = int(np.ceil(self.n_particles ** (1.0 / self.dim) - 1e-9))
        grid = np.indices((side,) * self.dim).reshape(self.dim, -1).T
        pos = spacing * grid[: self.n_particles].astype(float)
        pos -= pos.mean(axis=0)
        if rng is not None and jitter > 0.0:
            pos = pos + rng.normal(0.0, jitter, size=pos.shape)
        return pos.reshape(-1)


PotentialModel = Annotated[
    Union[Quadratic, DoubleWell, LennardJones], Field(discriminator="kind")
]


def energy(potential: _Potential, x) -> float:
    """
    ``V(x)`` for any potential variant.
    """
    return potential.energy(x)


def gradient(potential: _Potential, x) -> np.ndarray:
    """
    ``grad V(x)`` for any potential variant.
    """
    return potential.gradient(x)


def check_dimension(potential: _Potential, n: int) -> None:
    if potential.dimension != n:
        raise DimensionError(
            f"potential '{potential.kind}' acts on R^{potential.dimension}, "
            f"system has dimension {n}"
        )
