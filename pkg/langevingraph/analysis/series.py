"""
Time-series diagnostics: rate fits, autocorrelation, marginals, batch means
and well-transition counts.
"""

from typing import NamedTuple, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from scipy import stats

from ..integrators.trajectory import Trajectory
from ..utils.errors import DataError, DegenerateSeriesError, DimensionError
from ..utils.linalg import as_vector
from ..utils.logging import get_logger

logger = get_logger(__name__)

KL_FLOOR = 1e-14
MIN_FIT_POINTS = 5


class ScalarSeries(BaseModel):
    """
    Values sampled at strictly increasing times.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    times: np.ndarray
    values: np.ndarray

    @model_validator(mode="before")
    @classmethod
    def _arrays(cls, data):
        if isinstance(data, dict):
            data = {
                **data,
                "times": as_vector(data.get("times", []), "times"),
                "values": np.atleast_1d(np.asarray(data.get("values", []), dtype=float)),
            }
        return data

    @model_validator(mode="after")
    def _consistent(self):
        if self.times.shape != self.values.shape:
            raise DimensionError(
                f"times ({self.times.shape[0]}) and values ({self.values.shape[0]}) differ in length"
            )
        if np.any(np.diff(self.times) <= 0.0):
            raise DataError("times must be strictly increasing")
        return self

    def __len__(self) -> int:
        return self.times.shape[0]

    def to_rows(self) -> np.ndarray:
        return np.column_stack([self.times, self.values])


class RateFit(NamedTuple):
    rate: float
    intercept: float
    r_squared: float


def _line_fit(t: np.ndarray, v: np.ndarray) -> RateFit:
    fit = stats.linregress(t, v)
    ss_tot = float(np.sum((v - v.mean()) ** 2))
    if ss_tot == 0.0:
        r_squared = 1.0
    else:
        residual = v - (fit.intercept + fit.slope * t)
        r_squared = 1.0 - float(np.sum(residual**2)) / ss_tot
    return RateFit(-float(fit.slope), float(fit.intercept), r_squared)


def fit_exponential_rate(
    series: ScalarSeries,
    window: Tuple[float, float],
    floor: float = KL_FLOOR,
) -> RateFit:
    """
    Least-squares fit of ``log(value) = intercept - rate * t`` on a window.

    Values below ``floor`` are clamped to ``floor`` before taking logs; at
    least five points in the window must lie above it.

    Returns:
        RateFit: ``(rate, intercept, r_squared)``.

    Raises:
        DataError: If fewer than five usable points fall in the window.
    """
    t_lo, t_hi = window
    mask = (series.times >= t_lo) & (series.times <= t_hi)
    t = series.times[mask]
    v = series.values[mask]
    usable = int(np.sum(v > floor))
    if usable < MIN_FIT_POINTS:
        raise DataError(
            f"only {usable} points above {floor:g} in window [{t_lo}, {t_hi}], "
            f"need {MIN_FIT_POINTS}"
        )
    return _line_fit(t, np.log(np.maximum(v, floor)))


def autocorrelation(series, max_lag: int) -> np.ndarray:
    """
    Normalised autocorrelation of a uniformly sampled series.

    ``C(s) = sum_t u_t u_{t+s} / sum_t u_t^2`` over the overlapping window,
    with ``u`` the mean-centred series; ``C(0) = 1``.

    Raises:
        DataError: If the series is not longer than ``max_lag``.
        DegenerateSeriesError: If the series has zero variance.
    """
    u = as_vector(series, "series")
    if max_lag < 0 or u.shape[0] <= max_lag:
        raise DataError(f"series of length {u.shape[0]} is too short for max_lag={max_lag}")
    u = u - u.mean()
    denom = float(u @ u)
    if denom <= 1e-300 or denom <= 1e-24 * u.shape[0] * float(np.max(np.abs(u))) ** 2:
        raise DegenerateSeriesError("series has zero variance")

    acf = np.empty(max_lag + 1)
    acf[0] = 1.0
    for s in range(1, max_lag + 1):
        acf[s] = float(u[:-s] @ u[s:]) / denom
    return acf


def histogram_marginal(
    traj: Union[Trajectory, np.ndarray],
    index: int,
    bins: int,
    value_range: Tuple[float, float],
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Density-normalised histogram of one position coordinate.

    Args:
        traj: Trajectory, or an array of samples (1-D, or 2-D with one
            column per coordinate).
        index (int): Coordinate index.
        bins (int): Number of bins.
        value_range (tuple): ``(lo, hi)``; a warning is logged when it covers
            less than 99% of the samples.

    Returns:
        tuple: ``(edges, densities)``.

    Raises:
        DataError: If there are no samples.
    """
    if isinstance(traj, Trajectory):
        samples = traj.positions(index)
    else:
        arr = np.asarray(traj, dtype=float)
        samples = arr if arr.ndim == 1 else arr[:, index]
    if samples.size == 0:
        raise DataError("cannot build a histogram from an empty trajectory")

    lo, hi = value_range
    inside = float(np.mean((samples >= lo) & (samples <= hi)))
    if inside < 0.99:
        logger.warning_once(
            f"histogram range [{lo}, {hi}] covers only {100 * inside:.1f}% of the samples"
        )
    densities, edges = np.histogram(samples, bins=bins, range=(lo, hi), density=True)
    return edges, densities


def eps_scaling_slope(eps_values, errors) -> float:
    """
    Slope of ``log(error)`` against ``log(eps)``.

    Raises:
        DataError: With fewer than four points or non-positive entries.
    """
    eps_values = as_vector(eps_values, "eps_values")
    errors = as_vector(errors, "errors", eps_values.shape[0])
    if eps_values.shape[0] < 4:
        raise DataError(f"need at least 4 eps values, got {eps_values.shape[0]}")
    if np.any(eps_values <= 0.0) or np.any(errors <= 0.0):
        raise DataError("eps values and errors must be positive")
    if eps_values.max() / eps_values.min() < 10.0:
        logger.warning_once("eps values span less than one decade; slope is less reliable")
    return -_line_fit(np.log(eps_values), np.log(errors)).rate


def batch_means(values, n_batches: int = 20) -> Tuple[float, float]:
    """
    Mean and batch-means standard error of a correlated series.

    Raises:
        DataError: If there are fewer samples than batches or fewer than two batches.
    """
    values = np.asarray(values, dtype=float).reshape(-1)
    if n_batches < 2 or values.shape[0] < n_batches:
        raise DataError(
            f"cannot split {values.shape[0]} samples into {n_batches} batches"
        )
    size = values.shape[0] // n_batches
    means = values[: size * n_batches].reshape(n_batches, size).mean(axis=1)
    return float(means.mean()), float(means.std(ddof=1) / np.sqrt(n_batches))


def count_transitions(series, band: float = 0.5) -> int:
    """
    Number of well changes of a double-well coordinate.

    A well is entered when the coordinate goes beyond ``+band`` or ``-band``;
    a transition is counted on entering the well opposite to the last one.
    """
    q = np.asarray(series, dtype=float).reshape(-1)
    side = np.where(q > band, 1, np.where(q < -band, -1, 0))
    side = side[side != 0]
    if side.size < 2:
        return 0
    return int(np.count_nonzero(np.diff(side)))


def well_balance(series, signed: bool = False) -> Optional[float]:
    """
    ``|P(q < 0) - P(q > 0)|`` of a double-well coordinate.

    With ``signed=True`` the difference keeps its sign, so balances of
    equally long runs can be averaged before taking the modulus.
    """
    q = np.asarray(series, dtype=float).reshape(-1)
    if q.size == 0:
        return None
    offset = float(np.mean(q < 0.0) - np.mean(q > 0.0))
    return offset if signed else abs(offset)
