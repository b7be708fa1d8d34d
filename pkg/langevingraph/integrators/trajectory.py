"""
Integrator specification and recorded trajectories.
"""

from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..models.system import PhaseState
from ..utils.data_export import export_to_csv
from ..utils.logging import get_logger

logger = get_logger(__name__)

Scheme = Literal[
    "baoab_controlled",
    "euler_maruyama_overdamped",
    "rk4_gradient_flow",
    "scaled_underdamped",
]


class IntegratorSpec(BaseModel):
    """
    Scheme, step size, number of steps and recording stride.

    Steps ``0, thin, 2 thin, ...`` up to ``n_steps`` are recorded, so a run
    records ``n_steps // thin + 1`` states.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    scheme: Scheme = "baoab_controlled"
    dt: float = Field(gt=0.0)
    n_steps: int = Field(ge=0)
    thin: int = Field(default=1, ge=1)

    @property
    def horizon(self) -> float:
        return self.dt * self.n_steps

    @property
    def n_records(self) -> int:
        return self.n_steps // self.thin + 1

    def record_times(self) -> np.ndarray:
        return self.dt * self.thin * np.arange(self.n_records)

    def warn_if_ragged(self) -> None:
        if self.n_steps % self.thin:
            logger.warning_once(
                f"thin={self.thin} does not divide n_steps={self.n_steps}; "
                "the final step is not recorded"
            )


class Trajectory(BaseModel):
    """
    Thinned time series of states.

    Attributes:
        times (np.ndarray): Recording times, uniform with spacing ``dt * thin``.
        x (np.ndarray): Positions, shape ``(len(times), n)``.
        y (Optional[np.ndarray]): Velocities, None for first-order schemes.
        seed (Optional[int]): Seed of the driving noise, None if deterministic.
        spec (IntegratorSpec): Spec that produced the trajectory.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    times: np.ndarray
    x: np.ndarray
    y: Optional[np.ndarray] = None
    seed: Optional[int] = None
    spec: IntegratorSpec

    def __len__(self) -> int:
        return self.times.shape[0]

    @property
    def dimension(self) -> int:
        return self.x.shape[1]

    def positions(self, index: Optional[int] = None) -> np.ndarray:
        return self.x if index is None else self.x[:, index]

    def velocities(self, index: Optional[int] = None) -> np.ndarray:
        if self.y is None:
            raise AttributeError(f"scheme '{self.spec.scheme}' records positions only")
        return self.y if index is None else self.y[:, index]

    def state(self, i: int) -> PhaseState:
        y = np.zeros(self.dimension) if self.y is None else self.y[i]
        return PhaseState(x=self.x[i], y=y)

    def final_state(self) -> PhaseState:
        return self.state(-1)

    def header(self) -> List[str]:
        n = self.dimension
        cols = ["t"] + [f"x{i}" for i in range(n)]
        if self.y is not None:
            cols += [f"y{i}" for i in range(n)]
        return cols

    def to_rows(self) -> np.ndarray:
        """
        ``(len, 1 + n [+ n])`` array matching :meth:`header`.
        """
        blocks = [self.times[:, None], self.x]
        if self.y is not None:
            blocks.append(self.y)
        return np.hstack(blocks)


def write_trajectory_csv(
    trajectory: Trajectory, filename: str, cfg_hash: str
) -> str:
    """
    Write ``t,x0,...,x{n-1}[,y0,...,y{n-1}]`` with one row per recorded step.
    """
    return export_to_csv(
        trajectory.to_rows().tolist(),
        trajectory.header(),
        filename,
        cfg_hash,
        trajectory.seed,
    )
