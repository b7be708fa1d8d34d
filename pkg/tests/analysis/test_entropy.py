"""
Tests for entropy production and the integrated relative-entropy bound.
"""

import numpy as np
import pytest

from langevingraph.analysis.entropy import FIRReport, aep_rate_monte_carlo, fir_check
from langevingraph.integrators.noise import NoiseStream
from langevingraph.models.potentials import DoubleWell, Quadratic
from langevingraph.models.system import (
    TwoTemperatureSystem,
    aep_integrand,
    aep_rate,
    random_skew,
)
from langevingraph.utils.errors import DimensionError, ScopeError

TIMES = np.linspace(0.0, 10.0, 201)


@pytest.fixture
def potential():
    return Quadratic(k_mat=np.diag([1.0, 2.0]))


def test_monte_carlo_matches_closed_form():
    rng = np.random.default_rng(21)
    system = TwoTemperatureSystem.from_friction(
        [[1.0, 0.3], [0.3, 0.8]], 1.0, 2.0, random_skew(2, rng)
    )
    mean, se = aep_rate_monte_carlo(system, 200_000, NoiseStream(5, 2))
    assert abs(mean - aep_rate(system)) < 4.0 * se


def test_monte_carlo_draws_follow_the_stream_order():
    system = TwoTemperatureSystem.from_friction(
        np.eye(2), 1.0, 4.0, random_skew(2, np.random.default_rng(2))
    )
    noise = NoiseStream(8, 2)
    mean, _ = aep_rate_monte_carlo(system, 100, noise)
    assert noise.consumed == 100

    stream = NoiseStream(8, 2)
    y = np.stack([stream.normal() for _ in range(100)]) / 2.0
    assert mean == pytest.approx(float(aep_integrand(system, y).mean()), rel=1e-12)
    assert aep_rate_monte_carlo(system, 100, NoiseStream(8, 2))[0] == mean

    with pytest.raises(DimensionError):
        aep_rate_monte_carlo(system, 100, NoiseStream(8, 3))


def test_optimal_control_is_monotone(potential):
    system = TwoTemperatureSystem.from_friction(np.eye(2), 1.0, 2.0)
    report = fir_check(system, potential, 0.1 * np.eye(4), TIMES)
    assert report.rate <= 1e-14
    assert report.monotone is True
    assert report.passed
    assert report.verdict == "PASS"
    assert report.to_rows().shape == (201, 4)


def test_bound_holds_for_random_admissible_controls(potential):
    rng = np.random.default_rng(13)
    for _ in range(20):
        system = TwoTemperatureSystem.from_friction(
            np.eye(2), 1.0, 2.0, random_skew(2, rng, scale=2.0)
        )
        report = fir_check(system, potential, 0.1 * np.eye(4), TIMES)
        assert report.monotone is None
        assert report.passed, report.max_violation


def test_non_quadratic_potential_is_out_of_scope():
    system = TwoTemperatureSystem.from_friction(np.eye(2), 1.0, 2.0)
    with pytest.raises(ScopeError):
        fir_check(system, DoubleWell(d=1), 0.1 * np.eye(4), TIMES)


def test_report_flags_violations():
    report = FIRReport(
        times=np.array([0.0, 1.0]),
        kl=np.array([0.1, 0.3]),
        bound=np.array([0.0, 0.1]),
        rate=0.1,
        tolerance=1e-9,
    )
    assert report.max_violation == pytest.approx(0.1)
    assert report.verdict == "FAIL"
