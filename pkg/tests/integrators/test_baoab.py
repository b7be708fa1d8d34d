"""
Tests for the BAOAB integrators.
"""

import numpy as np
import pytest
from scipy import linalg as sla

from langevingraph.analysis.series import batch_means
from langevingraph.integrators.baoab import (
    baoab_stationary_covariance,
    baoab_step,
    max_scaled_dt,
    ou_transition,
    simulate_controlled,
    simulate_scaled,
)
from langevingraph.integrators.noise import NoiseStream
from langevingraph.integrators.trajectory import IntegratorSpec
from langevingraph.models.potentials import DoubleWell, LennardJones, Quadratic
from langevingraph.models.system import PhaseState, TwoTemperatureSystem, random_skew
from langevingraph.utils.errors import SingularityError, StabilityError, ValidationError


@pytest.fixture
def scalar_system():
    return TwoTemperatureSystem.from_friction([[1.0]], beta_bar=1.0, beta=2.0)


def test_ou_transition_thermal_matches_lyapunov_path():
    f = np.array([[2.0, 0.5], [0.5, 1.0]])
    beta = 3.0
    q = 2.0 * f / beta
    e, s = ou_transition(f, q, 0.1, beta)
    _, s_general = ou_transition(f, q, 0.1)
    assert np.allclose(e, sla.expm(-0.1 * f))
    assert np.allclose(s @ s.T, (np.eye(2) - sla.expm(-0.2 * f)) / beta)
    assert np.allclose(s @ s.T, s_general @ s_general.T, atol=1e-12)


def test_ou_transition_zero_diffusion():
    e, s = ou_transition([[1.0]], [[0.0]], 0.5)
    assert e[0, 0] == pytest.approx(np.exp(-0.5))
    assert s[0, 0] == 0.0


def test_ou_transition_rejects_unstable_friction():
    with pytest.raises(StabilityError):
        ou_transition([[-1.0]], [[1.0]], 0.1)


def test_record_count(scalar_system):
    spec = IntegratorSpec(dt=0.01, n_steps=10, thin=1)
    traj = simulate_controlled(
        PhaseState.at_rest([1.0]), scalar_system, Quadratic(k_mat=[[1.0]]), spec, NoiseStream(0, 1)
    )
    assert len(traj) == 11
    assert traj.x[0, 0] == 1.0
    assert traj.seed == 0


def test_runs_are_deterministic():
    rng = np.random.default_rng(0)
    system = TwoTemperatureSystem.from_friction(np.eye(2), 1.0, 3.0, random_skew(2, rng))
    pot = Quadratic(k_mat=[[1.0, 0.2], [0.2, 2.0]])
    spec = IntegratorSpec(dt=0.05, n_steps=200, thin=5)
    runs = [
        simulate_controlled(PhaseState.at_rest([1.0, -1.0]), system, pot, spec, NoiseStream(12, 2))
        for _ in range(2)
    ]
    assert np.array_equal(runs[0].x, runs[1].x)
    assert np.array_equal(runs[0].y, runs[1].y)


def test_single_step_matches_simulation(scalar_system):
    pot = Quadratic(k_mat=[[2.0]])
    init = PhaseState(x=[0.5], y=[-0.2])
    stepped = baoab_step(init, scalar_system, pot, 0.1, NoiseStream(4, 1))
    traj = simulate_controlled(
        init, scalar_system, pot, IntegratorSpec(dt=0.1, n_steps=1), NoiseStream(4, 1)
    )
    assert np.allclose(stepped.x, traj.x[-1])
    assert np.allclose(stepped.y, traj.y[-1])


def test_wrong_scheme(scalar_system):
    spec = IntegratorSpec(scheme="rk4_gradient_flow", dt=0.1, n_steps=1)
    with pytest.raises(ValidationError):
        simulate_controlled(
            PhaseState.at_rest([0.0]), scalar_system, Quadratic(k_mat=[[1.0]]), spec, NoiseStream(0, 1)
        )


def test_failures_carry_the_step_index():
    system = TwoTemperatureSystem.from_friction(np.eye(4), 1.0, 1.0)
    pot = LennardJones(n_particles=2, dim=2)
    with pytest.raises(SingularityError, match="^step 0"):
        simulate_controlled(
            PhaseState.at_rest(np.zeros(4)), system, pot, IntegratorSpec(dt=0.01, n_steps=5), NoiseStream(0, 4)
        )


def test_stationary_covariance_configurational_marginal_exact(scalar_system):
    cov = baoab_stationary_covariance(scalar_system, [[2.0]], 0.2)
    assert cov[0, 0] == pytest.approx(1.0 / (2.0 * scalar_system.beta), rel=1e-8)


def test_stationary_covariance_velocity_bias_is_second_order(scalar_system):
    target = 1.0 / scalar_system.beta
    bias = [
        abs(baoab_stationary_covariance(scalar_system, [[2.0]], dt)[1, 1] - target)
        for dt in (0.1, 0.05)
    ]
    assert bias[0] > 0.0
    assert 3.5 < bias[0] / bias[1] < 4.5


def test_stationary_covariance_converges_to_gibbs():
    system = TwoTemperatureSystem.from_friction([[1.0, 0.2], [0.2, 0.5]], 1.0, 2.0)
    k_mat = np.array([[1.0, 0.3], [0.3, 2.0]])
    expected = sla.block_diag(np.linalg.inv(k_mat), np.eye(2)) / system.beta
    cov = baoab_stationary_covariance(system, k_mat, 1e-3)
    assert np.allclose(cov, expected, atol=1e-5)


def test_long_run_covariance_matches_gibbs(scalar_system):
    spec = IntegratorSpec(dt=0.05, n_steps=200_000, thin=10)
    traj = simulate_controlled(
        PhaseState.at_rest([0.0]), scalar_system, Quadratic(k_mat=[[1.0]]), spec, NoiseStream(2024, 1)
    )
    target = 1.0 / scalar_system.beta
    for samples in (traj.x[1000:, 0] ** 2, traj.y[1000:, 0] ** 2):
        mean, se = batch_means(samples, 20)
        assert abs(mean - target) < 4.0 * se + 1e-3


def test_max_scaled_dt():
    assert max_scaled_dt(0.1, [[2.0]]) == pytest.approx(0.01 / 20.0)


def test_scaled_refuses_large_steps():
    spec = IntegratorSpec(scheme="scaled_underdamped", dt=0.01, n_steps=10)
    with pytest.raises(StabilityError, match="eps\\^2"):
        simulate_scaled(
            PhaseState.at_rest([1.0]),
            Quadratic(k_mat=[[1.0]]),
            [[1.0]],
            [[1.0]],
            0.1,
            "fixed_sim_temp",
            spec,
            NoiseStream(0, 1),
        )


def test_scaled_noise_free_path_approaches_gradient_flow():
    # with a vanishing noise matrix the scaled dynamics follow x' = -x for small eps
    eps = 0.05
    dt = max_scaled_dt(eps, [[1.0]])
    n_steps = int(np.ceil(0.5 / dt)) + 1
    spec = IntegratorSpec(scheme="scaled_underdamped", dt=0.5 / n_steps, n_steps=n_steps)
    traj = simulate_scaled(
        PhaseState.at_rest([1.0]),
        Quadratic(k_mat=[[1.0]]),
        [[1.0]],
        [[0.0]],
        eps,
        "fixed_target_temp",
        spec,
        NoiseStream(0, 1),
    )
    assert traj.x[-1, 0] == pytest.approx(np.exp(-0.5), abs=0.05)


def test_sim_temp_scaling_is_a_change_of_clock():
    # the fixed_sim_temp form at step dt is the controlled chain at step dt / eps
    gamma = np.array([[0.04, 0.02, 0.0], [0.02, 0.04, 0.02], [0.0, 0.02, 0.04]])
    system = TwoTemperatureSystem.from_friction(gamma, beta_bar=1.0, beta=5.0)
    potential = DoubleWell(d=2, k=1.0)
    init = PhaseState.at_rest([-1.0, -1.0, -1.0])
    eps = 0.2

    fast = simulate_scaled(
        init,
        potential,
        gamma,
        system.sigma,
        eps,
        "fixed_sim_temp",
        IntegratorSpec(scheme="scaled_underdamped", dt=5e-3, n_steps=200, thin=10),
        NoiseStream(4, 3),
    )
    slow = simulate_controlled(
        init, system, potential, IntegratorSpec(dt=5e-3 / eps, n_steps=200, thin=10), NoiseStream(4, 3)
    )
    assert np.allclose(fast.x, slow.x, atol=1e-8)
    assert np.allclose(fast.y, slow.y, atol=1e-8)
    assert fast.times[-1] == pytest.approx(eps * slow.times[-1])
