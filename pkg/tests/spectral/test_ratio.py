"""
Tests for the optimal temperature ratio.
"""

import numpy as np
import pytest

from langevingraph.spectral.linear_model import LinearTemplate, assemble, decay_rate, trace_rate_bound
from langevingraph.spectral.ratio import (
    abscissa_scan,
    commutes,
    diagonalize_commuting,
    eigenvalues_at,
    optimal_ratio_1d,
    optimal_ratio_commuting,
    optimal_ratio_search,
)
from langevingraph.utils.errors import CommutationError, DomainError


@pytest.fixture
def two_mode():
    return LinearTemplate(k_mat=np.eye(2), gamma=np.diag([1.0, 2.0]))


def test_optimal_ratio_1d():
    assert optimal_ratio_1d(1.0, 1.0) == 2.0
    assert optimal_ratio_1d(4.0, 2.0) == 2.0
    with pytest.raises(DomainError):
        optimal_ratio_1d(-1.0, 1.0)


@pytest.mark.parametrize("k, g", [(1.0, 1.0), (2.0, 0.5), (0.3, 3.0)])
def test_search_matches_scalar_closed_form(k, g):
    template = LinearTemplate(k_mat=[[k]], gamma=[[g]])
    expected = optimal_ratio_1d(k, g)
    alpha_star, rate = optimal_ratio_search(template, (0.05, 20.0), 1e-8)
    assert alpha_star == pytest.approx(expected, abs=1e-3)
    assert rate == pytest.approx(g * expected, rel=1e-3)


def test_commuting_closed_form(two_mode):
    k_diag, g_diag, s = diagonalize_commuting(two_mode.k_mat, two_mode.gamma)
    assert np.allclose(g_diag, [1.0, 2.0])
    assert np.allclose(s @ s.T, np.eye(2))
    assert optimal_ratio_commuting(k_diag, g_diag) == pytest.approx(np.sqrt(4.0 / 3.0))


def test_search_two_mode_example(two_mode):
    alpha_star, rate = optimal_ratio_search(two_mode, (0.05, 10.0), 1e-6)
    assert alpha_star == pytest.approx(np.sqrt(4.0 / 3.0), abs=1e-3)

    w = eigenvalues_at(two_mode, alpha_star)
    expected = np.array(
        [-0.5774 + 0.8165j, -0.5774 - 0.8165j, -0.5774 + 0.0j, -1.7321 + 0.0j]
    )
    for value in expected:
        assert np.min(np.abs(w - value)) < 1e-3

    pair = assemble(two_mode.at(alpha_star))
    assert 0.5 * trace_rate_bound(pair) == pytest.approx(0.8660, abs=1e-4)
    # the trace bound is not attained when the friction is not scalar
    assert decay_rate(pair) / 2.0 < 0.5 * trace_rate_bound(pair) - 0.1
    assert rate == pytest.approx(decay_rate(pair), rel=1e-9)


def test_search_beats_every_grid_point(two_mode):
    alpha_star, rate = optimal_ratio_search(two_mode)
    scan = abscissa_scan(two_mode, np.linspace(0.05, 10.0, 400))
    assert -2.0 * np.min(scan["abscissa"]) <= rate + 1e-12


def test_abscissa_scan_shapes(two_mode):
    scan = abscissa_scan(two_mode, [0.5, 1.0, 2.0])
    assert scan["real_parts"].shape == (3, 4)
    assert np.array_equal(scan["abscissa"], scan["real_parts"][:, 0])
    assert np.all(np.diff(scan["real_parts"], axis=1) <= 0.0)


def test_repeated_friction_eigenvalue():
    k_mat = np.array([[2.0, 1.0], [1.0, 2.0]])
    k_diag, g_diag, s = diagonalize_commuting(k_mat, np.eye(2))
    assert np.allclose(np.sort(k_diag), [1.0, 3.0])
    assert np.allclose(s @ k_mat @ s.T, np.diag(k_diag), atol=1e-12)


def test_non_commuting_input():
    k_mat = np.array([[2.0, 1.0], [1.0, 2.0]])
    gamma = np.diag([1.0, 2.0])
    assert not commutes(k_mat, gamma)
    with pytest.raises(CommutationError):
        diagonalize_commuting(k_mat, gamma)


def test_invalid_ranges(two_mode):
    with pytest.raises(DomainError):
        optimal_ratio_search(two_mode, (1.0, 0.5))
    with pytest.raises(DomainError):
        optimal_ratio_search(two_mode, (0.1, 1.0), tol=0.0)
    with pytest.raises(DomainError):
        optimal_ratio_commuting([1.0, 1.0], [2.0, 1.0])
