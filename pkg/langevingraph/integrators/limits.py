"""
Limit equations of the scaled dynamics.

* ``fixed_sim_temp``: the gradient flow ``x' = -gamma^-1 grad V(x)``,
  integrated with classical RK4.
* ``fixed_target_temp``: the overdamped Langevin equation
  ``gamma dX = -grad V(X) dt + varsigma dW``, integrated with Euler-Maruyama.

Both consume noise (if any) one vector per step, on the same grid as
:func:`~langevingraph.integrators.baoab.simulate_scaled`, so a shared stream
couples the two.
"""

import numpy as np

from ..utils.errors import DimensionError, LangevinGraphError, StabilityError, ValidationError
from ..utils.linalg import as_matrix, as_vector, check_spd
from .noise import NoiseStream
from .trajectory import IntegratorSpec, Trajectory


def _prepare(init, potential, gamma, spec: IntegratorSpec, scheme: str):
    if spec.scheme != scheme:
        raise ValidationError(f"expected scheme '{scheme}', got '{spec.scheme}'")
    gamma = check_spd(gamma, "gamma")
    n = gamma.shape[0]
    x = as_vector(init, "init", n).copy()
    if potential.dimension != n:
        raise DimensionError(f"potential dimension {potential.dimension} != {n}")
    spec.warn_if_ragged()
    return x, np.linalg.inv(gamma), n


def euler_maruyama_overdamped(
    init,
    potential,
    gamma,
    varsigma,
    spec: IntegratorSpec,
    noise: NoiseStream,
) -> Trajectory:
    """
    ``x <- x - dt gamma^-1 grad V(x) + gamma^-1 varsigma sqrt(dt) xi``.

    Args:
        init: Initial position.
        potential: Potential model.
        gamma: SPD friction.
        varsigma: Noise matrix; ``beta varsigma varsigma^T = 2 gamma`` samples
            ``exp(-beta V)``.
        spec (IntegratorSpec): Must use the ``euler_maruyama_overdamped`` scheme.
        noise (NoiseStream): One standard Gaussian vector per step.
    """
    x, gamma_inv, n = _prepare(init, potential, gamma, spec, "euler_maruyama_overdamped")
    c = as_matrix(varsigma, "varsigma")
    if c.shape != (n, n):
        raise DimensionError(f"varsigma has shape {c.shape}, expected {(n, n)}")
    if noise.n != n:
        raise DimensionError(f"noise stream has dimension {noise.n}, state has {n}")

    dt = spec.dt
    diffusion = np.sqrt(dt) * (gamma_inv @ c)
    drift = dt * gamma_inv
    grad = potential.raw_gradient

    xs = np.empty((spec.n_records, n))
    xs[0] = x
    step = 0
    try:
        for step in range(1, spec.n_steps + 1):
            x = x - drift @ grad(x) + diffusion @ noise.normal()
            if step % spec.thin == 0:
                if not np.all(np.isfinite(x)):
                    raise StabilityError("state became non-finite")
                xs[step // spec.thin] = x
    except LangevinGraphError as err:
        raise type(err)(f"step {step}: {err}") from err

    return Trajectory(times=spec.record_times(), x=xs, seed=noise.seed, spec=spec)


def rk4_gradient_flow(init, potential, gamma, spec: IntegratorSpec) -> Trajectory:
    """
    Classical fourth-order Runge-Kutta for ``x' = -gamma^-1 grad V(x)``.
    """
    x, gamma_inv, n = _prepare(init, potential, gamma, spec, "rk4_gradient_flow")
    dt = spec.dt
    grad = potential.raw_gradient

    def rhs(z):
        return -gamma_inv @ grad(z)

    xs = np.empty((spec.n_records, n))
    xs[0] = x
    step = 0
    try:
        for step in range(1, spec.n_steps + 1):
            k1 = rhs(x)
            k2 = rhs(x + 0.5 * dt * k1)
            k3 = rhs(x + 0.5 * dt * k2)
            k4 = rhs(x + dt * k3)
            x = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            if step % spec.thin == 0:
                if not np.all(np.isfinite(x)):
                    raise StabilityError("state became non-finite")
                xs[step // spec.thin] = x
    except LangevinGraphError as err:
        raise type(err)(f"step {step}: {err}") from err

    return Trajectory(times=spec.record_times(), x=xs, seed=None, spec=spec)
