"""
Tests for the nodes of the linear-model experiments.
"""

import numpy as np
import pytest

from langevingraph.helpers.config_schemas import OuKlParams, RatioParams
from langevingraph.nodes import (
    ClosedFormRatioNode,
    KLDecayNode,
    LinearModelNode,
    RatioReportNode,
    RatioScanNode,
)


def test_linear_model_and_kl_decay_centred():
    params = OuKlParams(alphas=[1.0, 2.0], t_max=20.0, n_times=201, mean_offset=0.0)
    state = {"params": params}
    LinearModelNode(input="params", output=["pairs"]).execute(state)
    assert list(state["pairs"]) == [1.0, 2.0]

    KLDecayNode(input="params & pairs", output=["curves", "rates"]).execute(state)
    rates = {row[0]: row for row in state["rates"]}
    assert rates[2.0][1] == pytest.approx(2.0, rel=1e-6)
    assert rates[2.0][2] == pytest.approx(4.0, rel=1e-6)
    assert rates[2.0][3] == pytest.approx(4.0, rel=0.1)
    assert set(state["tables"]) == {"kl_alpha_1.csv", "kl_alpha_2.csv", "rates.csv"}


def test_kl_decay_mean_offset_halves_expected_exponent():
    params = OuKlParams(alphas=[2.0], mean0=[1.0, 0.0], n_times=201)
    state = {"params": params}
    LinearModelNode(input="params", output=["pairs"]).execute(state)
    KLDecayNode(input="params & pairs", output=["curves", "rates"]).execute(state)
    assert state["rates"][0][2] == pytest.approx(2.0, rel=1e-6)


def test_kl_decay_default_start_is_displaced():
    params = OuKlParams(alphas=[2.0], n_times=201)
    assert params.initial_mean().tolist() == [1.0, 0.0]
    state = {"params": params}
    LinearModelNode(input="params", output=["pairs"]).execute(state)
    KLDecayNode(input="params & pairs", output=["curves", "rates"]).execute(state)
    alpha, spectral, expected, fitted, _ = state["rates"][0]
    assert expected == pytest.approx(spectral)
    assert fitted == pytest.approx(2.0, rel=0.1)


def test_zero_mean_is_centred():
    assert OuKlParams(mean0=[0.0, 0.0]).initial_mean() is None
    assert OuKlParams(mean_offset=0.0).initial_mean() is None
    assert OuKlParams(mean0=[0.0, 2.0], mean_offset=0.0).initial_mean().tolist() == [0.0, 2.0]


def test_kl_decay_without_fit_points():
    params = OuKlParams(alphas=[2.0], t_max=1.0, n_times=3, fit_window=(0.0, 1.0))
    state = {"params": params}
    LinearModelNode(input="params", output=["pairs"]).execute(state)
    KLDecayNode(input="params & pairs", output=["curves", "rates"]).execute(state)
    assert np.isnan(state["rates"][0][3])


def run_ratio(params, closed_form):
    state = {"params": params}
    RatioScanNode(input="params", output=["scan", "search", "commuting"]).execute(state)
    if closed_form:
        ClosedFormRatioNode(input="params", output=["closed_form"]).execute(state)
    RatioReportNode(input="search & closed_form | search", output=["summary"]).execute(state)
    return state


def test_ratio_nodes_commuting_case():
    state = run_ratio(RatioParams(), closed_form=True)
    assert state["commuting"]
    summary = state["summary"]
    assert summary["alpha_star_closed_form"] == pytest.approx(np.sqrt(4.0 / 3.0))
    assert summary["alpha_star_search"] == pytest.approx(np.sqrt(4.0 / 3.0), abs=1e-3)
    assert summary["abscissa_bound"] == pytest.approx(0.8660, abs=1e-4)
    header, rows = state["tables"]["ratio.csv"]
    assert header[-1] == "alpha_star_closed_form"
    header, rows = state["tables"]["abscissa_vs_alpha.csv"]
    assert header == ["alpha", "abscissa", "re_0", "re_1", "re_2", "re_3"]
    assert rows.shape == (400, 6)


def test_ratio_nodes_non_commuting_case():
    params = RatioParams(k_mat=[[2.0, 1.0], [1.0, 2.0]], gamma=[[1.0, 0.0], [0.0, 2.0]])
    state = run_ratio(params, closed_form=False)
    assert not state["commuting"]
    assert "alpha_star_closed_form" not in state["summary"]
    eig = state["tables"]["eigenvalues_at_optimum.csv"][1]
    assert eig.shape == (4, 2)
