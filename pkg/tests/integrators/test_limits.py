"""
Tests for the limit-equation integrators.
"""

import numpy as np
import pytest

from langevingraph.analysis.series import batch_means
from langevingraph.integrators.limits import euler_maruyama_overdamped, rk4_gradient_flow
from langevingraph.integrators.noise import NoiseStream
from langevingraph.integrators.trajectory import IntegratorSpec
from langevingraph.models.potentials import LennardJones, Quadratic
from langevingraph.utils.errors import DimensionError, ValidationError


def em_spec(dt, n_steps, thin=1):
    return IntegratorSpec(scheme="euler_maruyama_overdamped", dt=dt, n_steps=n_steps, thin=thin)


def test_rk4_matches_exponential_decay():
    spec = IntegratorSpec(scheme="rk4_gradient_flow", dt=0.01, n_steps=100, thin=10)
    traj = rk4_gradient_flow([1.0], Quadratic(k_mat=[[2.0]]), [[1.0]], spec)
    assert traj.x.shape == (11, 1)
    assert traj.x[:, 0] == pytest.approx(np.exp(-2.0 * traj.times), rel=1e-8)


def test_rk4_uses_friction_as_mobility():
    spec = IntegratorSpec(scheme="rk4_gradient_flow", dt=0.01, n_steps=100)
    traj = rk4_gradient_flow([1.0, 1.0], Quadratic(k_mat=np.eye(2)), np.diag([1.0, 4.0]), spec)
    assert traj.x[-1] == pytest.approx([np.exp(-1.0), np.exp(-0.25)], rel=1e-8)


@pytest.mark.slow
def test_rk4_descends_lennard_jones_cluster():
    potential = LennardJones(n_particles=7, dim=2)
    x0 = potential.lattice_configuration(jitter=0.1, rng=np.random.default_rng(3))
    spec = IntegratorSpec(scheme="rk4_gradient_flow", dt=1e-3, n_steps=20_000)
    traj = rk4_gradient_flow(x0, potential, np.eye(potential.dimension), spec)

    energies = np.array([potential.energy(x) for x in traj.x])
    assert np.all(np.diff(energies) <= 1e-10)
    assert energies[-1] < -11.0


def test_euler_maruyama_without_noise_is_explicit_euler():
    traj = euler_maruyama_overdamped(
        [1.0], Quadratic(k_mat=[[2.0]]), [[1.0]], [[0.0]], em_spec(0.01, 100), NoiseStream(0, 1)
    )
    assert traj.x[-1, 0] == pytest.approx(0.98**100, rel=1e-12)


def test_euler_maruyama_stationary_variance():
    beta, dt = 2.0, 0.01
    varsigma = [[np.sqrt(2.0 / beta)]]
    traj = euler_maruyama_overdamped(
        [0.0], Quadratic(k_mat=[[1.0]]), [[1.0]], varsigma, em_spec(dt, 200_000, thin=10),
        NoiseStream(4, 1),
    )
    # chain x' = (1 - dt) x + sqrt(dt) c xi
    expected = 1.0 / (beta * (1.0 - 0.5 * dt))
    mean, stderr = batch_means(traj.x[:, 0] ** 2)
    assert abs(mean - expected) < 4.0 * stderr


def test_euler_maruyama_same_stream_same_path():
    potential = Quadratic(k_mat=[[1.0]])
    runs = [
        euler_maruyama_overdamped(
            [0.5], potential, [[1.0]], [[1.0]], em_spec(0.01, 50), NoiseStream(9, 1, key=(2,))
        )
        for _ in range(2)
    ]
    assert np.array_equal(runs[0].x, runs[1].x)


def test_scheme_must_match():
    spec = IntegratorSpec(scheme="rk4_gradient_flow", dt=0.01, n_steps=10)
    with pytest.raises(ValidationError):
        euler_maruyama_overdamped(
            [0.0], Quadratic(k_mat=[[1.0]]), [[1.0]], [[1.0]], spec, NoiseStream(0, 1)
        )


def test_varsigma_shape_checked():
    with pytest.raises(DimensionError):
        euler_maruyama_overdamped(
            [0.0, 0.0], Quadratic(k_mat=np.eye(2)), np.eye(2), [[1.0]], em_spec(0.01, 10),
            NoiseStream(0, 2),
        )
