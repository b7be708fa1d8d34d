"""
Tests for the generator of the controlled dynamics.
"""

import numpy as np
import pytest

from langevingraph.analysis.generator import (
    Constant,
    CrossMoment,
    Hamiltonian,
    SineX,
    VelocityComponent,
    VelocitySquare,
    generator_apply,
    generator_expectation,
    stationary_samples,
)
from langevingraph.integrators.noise import NoiseStream
from langevingraph.models.potentials import Quadratic
from langevingraph.models.system import (
    PhaseState,
    TwoTemperatureSystem,
    fdr_noise,
    optimal_control,
    random_skew,
)
from langevingraph.utils.errors import DimensionError

K_MAT = np.array([[1.0, 0.3], [0.3, 2.0]])


@pytest.fixture
def potential():
    return Quadratic(k_mat=K_MAT)


def test_stationary_samples_have_gibbs_moments():
    system = TwoTemperatureSystem.from_friction(np.eye(2), 1.0, 4.0)
    x, y = stationary_samples(system, K_MAT, 200_000, NoiseStream(1, 2))
    assert x.shape == y.shape == (200_000, 2)
    assert np.allclose(np.cov(x.T), np.linalg.inv(K_MAT) / 4.0, atol=5e-3)
    assert np.allclose(np.cov(y.T), np.eye(2) / 4.0, atol=5e-3)


def test_stationary_samples_follow_the_stream_order():
    system = TwoTemperatureSystem.from_friction(np.eye(2), 1.0, 4.0)
    noise = NoiseStream(7, 2)
    x, y = stationary_samples(system, K_MAT, 50, noise)
    assert noise.consumed == 100

    stream = NoiseStream(7, 2)
    xi = np.stack([stream.normal() for _ in range(50)]) / 2.0
    eta = np.stack([stream.normal() for _ in range(50)]) / 2.0
    np.testing.assert_allclose(x @ np.linalg.cholesky(K_MAT), xi, atol=1e-12)
    np.testing.assert_allclose(y, eta, atol=1e-12)

    x_again, _ = stationary_samples(system, K_MAT, 50, NoiseStream(7, 2))
    np.testing.assert_array_equal(x_again, x)

    with pytest.raises(DimensionError):
        stationary_samples(system, K_MAT, 50, NoiseStream(7, 4))


def test_generator_at_a_point(potential):
    rng = np.random.default_rng(2)
    system = TwoTemperatureSystem.from_friction(np.eye(2), 1.0, 2.0, random_skew(2, rng))
    state = PhaseState(x=[0.5, -1.0], y=[0.3, 0.7])
    drift = (system.sigma @ system.b.T - system.gamma) @ state.y
    force = K_MAT @ state.x
    expected = state.y[0] * state.y[1] + state.x[0] * (-force[1] + drift[1])
    assert generator_apply(system, potential, CrossMoment(0, 1), state) == pytest.approx(expected)
    assert generator_apply(system, potential, VelocityComponent(0), state) == pytest.approx(
        -force[0] + drift[0]
    )
    assert generator_apply(system, potential, Constant(3.0), state) == 0.0


def test_admissible_controls_leave_gibbs_invariant(potential):
    rng = np.random.default_rng(7)
    gamma = np.array([[1.0, 0.2], [0.2, 0.5]])
    system = TwoTemperatureSystem.from_friction(gamma, 1.0, 3.0, random_skew(2, rng))
    samples = stationary_samples(system, K_MAT, 100_000, NoiseStream(3, 2))
    for f in (CrossMoment(0, 1), SineX(1), VelocitySquare(0), Hamiltonian(potential)):
        mean, se = generator_expectation(system, potential, f, samples)
        assert abs(mean) < 4.0 * se, f


def test_inadmissible_control_is_detected(potential):
    gamma = np.eye(2)
    sigma = fdr_noise(gamma, 1.0)
    system = TwoTemperatureSystem.model_construct(
        gamma=gamma,
        sigma=sigma,
        beta_bar=1.0,
        beta=5.0,
        b=1.2 * optimal_control(sigma, 1.0, 5.0),
    )
    samples = stationary_samples(system, K_MAT, 100_000, NoiseStream(4, 2))
    mean, se = generator_expectation(system, potential, VelocitySquare(0), samples)
    assert mean == pytest.approx(-0.32, abs=0.05)
    assert abs(mean) > 10.0 * se
