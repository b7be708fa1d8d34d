"""
BAOAB splitting for the controlled Langevin equation and its scaled forms.

One step is B(dt/2) A(dt/2) O(dt) A(dt/2) B(dt/2) with

* B: ``y <- y - (dt/2) grad V(x)``
* A: ``x <- x + (dt/2) y``
* O: the exact Ornstein-Uhlenbeck update ``y <- E y + S xi`` of
  ``dy = -F y dt + sigma dW`` with ``E = exp(-F dt)`` and ``S S^T`` the
  covariance accumulated over one step.

For the controlled system ``F = gamma - sigma B^T``; the O-step then samples
the velocity marginal at the target temperature exactly.
"""

from typing import Literal, Optional, Tuple

import numpy as np

from ..models.system import PhaseState, TwoTemperatureSystem, effective_friction
from ..utils.errors import (
    DimensionError,
    DomainError,
    LangevinGraphError,
    StabilityError,
    ValidationError,
)
from ..utils.linalg import (
    as_matrix,
    check_spd,
    expm,
    is_symmetric,
    solve_discrete_lyapunov,
    solve_lyapunov,
    spectral_abscissa,
    sqrtm_spd,
)
from ..utils.logging import get_logger
from .noise import NoiseStream
from .trajectory import IntegratorSpec, Trajectory

logger = get_logger(__name__)

Regime = Literal["fixed_sim_temp", "fixed_target_temp"]

STABILITY_FACTOR = 10.0


def ou_transition(
    friction, diffusion, dt: float, beta: Optional[float] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Exact one-step transition of ``dy = -F y dt + sigma dW``.

    Args:
        friction: Positive-stable matrix ``F``.
        diffusion: ``Q = sigma sigma^T``.
        dt (float): Step size.
        beta (Optional[float]): Inverse temperature. When ``F`` is symmetric and
            ``2 F = beta Q`` the covariance is ``(I - exp(-2 F dt)) / beta``;
            otherwise it solves ``F X + X F^T = Q - E Q E^T``.

    Returns:
        tuple: ``(E, S)`` with ``E = exp(-F dt)`` and ``S`` the symmetric root
        of the step covariance (zero for zero diffusion).

    Raises:
        StabilityError: If ``F`` is not positive-stable.
    """
    f = as_matrix(friction, "friction")
    q = as_matrix(diffusion, "diffusion")
    if q.shape != f.shape:
        raise DimensionError(f"diffusion has shape {q.shape}, expected {f.shape}")
    if not dt > 0.0:
        raise DomainError(f"dt must be positive, got {dt}")
    abscissa = spectral_abscissa(-f)
    if abscissa >= 0.0:
        raise StabilityError(
            f"effective friction is not positive-stable (abscissa of -F is {abscissa:.6g})"
        )

    e = expm(-dt * f)
    if not np.any(q):
        return e, np.zeros_like(f)

    thermal = (
        beta is not None
        and is_symmetric(f)
        and np.linalg.norm(2.0 * f - beta * q) <= 1e-10 * max(1.0, np.linalg.norm(f))
    )
    if thermal:
        cov = (np.eye(f.shape[0]) - expm(-2.0 * dt * f)) / beta
    else:
        cov = solve_lyapunov(-f, q - e @ q @ e.T)
    return e, sqrtm_spd(0.5 * (cov + cov.T))


def _run_splitting(
    x: np.ndarray,
    y: np.ndarray,
    potential,
    e: np.ndarray,
    s: np.ndarray,
    spec: IntegratorSpec,
    noise: NoiseStream,
    velocity_scale: float = 1.0,
    force_scale: float = 1.0,
) -> Trajectory:
    spec.warn_if_ragged()
    n = x.shape[0]
    if noise.n != n:
        raise DimensionError(f"noise stream has dimension {noise.n}, state has {n}")

    hx = 0.5 * spec.dt * velocity_scale
    hf = 0.5 * spec.dt * force_scale
    thin = spec.thin
    xs = np.empty((spec.n_records, n))
    ys = np.empty((spec.n_records, n))
    xs[0], ys[0] = x, y

    grad = potential.raw_gradient
    step = 0
    try:
        g = grad(x)
        for step in range(1, spec.n_steps + 1):
            y = y - hf * g
            x = x + hx * y
            y = e @ y + s @ noise.normal()
            x = x + hx * y
            g = grad(x)
            y = y - hf * g
            if step % thin == 0:
                if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
                    raise StabilityError("state became non-finite")
                xs[step // thin] = x
                ys[step // thin] = y
    except LangevinGraphError as err:
        raise type(err)(f"step {step}: {err}") from err

    return Trajectory(
        times=spec.record_times(), x=xs, y=ys, seed=noise.seed, spec=spec
    )


def _check_init(init: PhaseState, n: int) -> None:
    if init.dimension != n:
        raise DimensionError(f"initial state has dimension {init.dimension}, expected {n}")


def baoab_step(
    state: PhaseState,
    system: TwoTemperatureSystem,
    potential,
    dt: float,
    noise: NoiseStream,
) -> PhaseState:
    """
    One BAOAB step of the controlled dynamics.

    Raises:
        StabilityError: If ``gamma - sigma B^T`` is not positive-stable.
    """
    system.check_potential(potential)
    _check_init(state, system.dimension)
    e, s = ou_transition(effective_friction(system), system.diffusion, dt, system.beta)

    x, y = state.x, state.y
    y = y - 0.5 * dt * potential.gradient(x)
    x = x + 0.5 * dt * y
    y = e @ y + s @ noise.normal()
    x = x + 0.5 * dt * y
    y = y - 0.5 * dt * potential.gradient(x)
    return PhaseState(x=x, y=y)


def simulate_controlled(
    init: PhaseState,
    system: TwoTemperatureSystem,
    potential,
    spec: IntegratorSpec,
    noise: NoiseStream,
) -> Trajectory:
    """
    Iterate :func:`baoab_step` and record every ``spec.thin``-th state.

    The O-step pieces are computed once. Errors raised during the run carry
    the failing step index.
    """
    if spec.scheme != "baoab_controlled":
        raise ValidationError(f"expected scheme 'baoab_controlled', got '{spec.scheme}'")
    system.check_potential(potential)
    _check_init(init, system.dimension)

    e, s = ou_transition(
        effective_friction(system), system.diffusion, spec.dt, system.beta
    )
    logger.debug(
        f"controlled BAOAB: n={system.dimension}, dt={spec.dt}, steps={spec.n_steps}, "
        f"ratio={system.ratio:.4g}"
    )
    return _run_splitting(init.x.copy(), init.y.copy(), potential, e, s, spec, noise)


def max_scaled_dt(eps: float, gamma) -> float:
    """
    Largest step accepted by :func:`simulate_scaled`: ``eps^2 / (10 |gamma|_2)``.
    """
    gamma = check_spd(gamma, "gamma")
    return eps * eps / (STABILITY_FACTOR * float(np.linalg.norm(gamma, 2)))


def simulate_scaled(
    init: PhaseState,
    potential,
    gamma,
    noise_matrix,
    eps: float,
    regime: Regime,
    spec: IntegratorSpec,
    noise: NoiseStream,
) -> Trajectory:
    """
    BAOAB for the time-rescaled dynamics::

        dX = Y / eps dt
        dY = -gamma / eps^2 Y dt - grad V(X) / eps dt + c dW

    with ``c = sigma / sqrt(eps)`` (``fixed_sim_temp``, ``noise_matrix`` is
    ``sigma``) or ``c = varsigma / eps`` (``fixed_target_temp``,
    ``noise_matrix`` is ``varsigma``).

    Args:
        init (PhaseState): Initial state.
        potential: Potential model.
        gamma: SPD friction.
        noise_matrix: ``sigma`` or ``varsigma`` depending on ``regime``.
        eps (float): Scale parameter in ``(0, 1]``.
        regime (str): ``"fixed_sim_temp"`` or ``"fixed_target_temp"``.
        spec (IntegratorSpec): Must use the ``scaled_underdamped`` scheme.
        noise (NoiseStream): One standard Gaussian vector is consumed per step.

    Raises:
        StabilityError: If ``spec.dt`` exceeds ``eps^2 / (10 |gamma|_2)``; the
            step is refused rather than sub-stepped.
    """
    if spec.scheme != "scaled_underdamped":
        raise ValidationError(f"expected scheme 'scaled_underdamped', got '{spec.scheme}'")
    if not 0.0 < eps <= 1.0:
        raise DomainError(f"eps must lie in (0, 1], got {eps}")
    if regime not in ("fixed_sim_temp", "fixed_target_temp"):
        raise DomainError(f"unknown regime '{regime}'")

    gamma = check_spd(gamma, "gamma")
    c = as_matrix(noise_matrix, "noise_matrix")
    n = gamma.shape[0]
    if c.shape != (n, n):
        raise DimensionError(f"noise_matrix has shape {c.shape}, expected {(n, n)}")
    if potential.dimension != n:
        raise DimensionError(f"potential dimension {potential.dimension} != {n}")
    _check_init(init, n)

    dt_max = max_scaled_dt(eps, gamma)
    if spec.dt > dt_max:
        raise StabilityError(
            f"dt={spec.dt:.3e} does not resolve the fast scale at eps={eps}: "
            f"use dt <= eps^2 / (10 |gamma|_2) = {dt_max:.3e}"
        )

    power = 1.0 if regime == "fixed_sim_temp" else 2.0
    e, s = ou_transition(gamma / eps**2, c @ c.T / eps**power, spec.dt)
    return _run_splitting(
        init.x.copy(),
        init.y.copy(),
        potential,
        e,
        s,
        spec,
        noise,
        velocity_scale=1.0 / eps,
        force_scale=1.0 / eps,
    )


def baoab_stationary_covariance(
    system: TwoTemperatureSystem, k_mat, dt: float
) -> np.ndarray:
    """
    Exact stationary covariance of the BAOAB chain for ``V(x) = x^T K x / 2``.

    The chain is linear, ``z' = M z + N xi``, so its stationary covariance
    solves ``X = M X M^T + N N^T``.

    Returns:
        np.ndarray: ``2n x 2n`` covariance of ``(x, y)``.
    """
    k_mat = check_spd(k_mat, "k_mat")
    n = system.dimension
    if k_mat.shape != (n, n):
        raise DimensionError(f"k_mat has shape {k_mat.shape}, expected {(n, n)}")
    e, s = ou_transition(effective_friction(system), system.diffusion, dt, system.beta)
    h = 0.5 * dt
    eye, zero = np.eye(n), np.zeros((n, n))

    kick = np.block([[eye, zero], [-h * k_mat, eye]])
    drift = np.block([[eye, h * eye], [zero, eye]])
    ou = np.block([[eye, zero], [zero, e]])
    noise_in = np.vstack([zero, s])

    m = kick @ drift @ ou @ drift @ kick
    nn = kick @ drift @ noise_in
    return solve_discrete_lyapunov(m, nn @ nn.T)
