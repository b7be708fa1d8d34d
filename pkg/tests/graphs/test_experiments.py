"""
End-to-end runs of the experiment graphs on small configurations.
"""

import os

import numpy as np
import pytest

from langevingraph.graphs import (
    AepExperiment,
    BistableExperiment,
    LimitsExperiment,
    LjCoolExperiment,
    OuKlExperiment,
    RatioExperiment,
)
from langevingraph.utils.data_export import read_csv
from langevingraph.utils.errors import ConfigError


def config(name, tmp_path, block=None, seed=0):
    data = {"experiment": name, "seed": seed, "output_dir": str(tmp_path)}
    if block is not None:
        data[name] = block
    return data


def names(paths):
    return sorted(os.path.basename(p) for p in paths)


def column(table, name):
    index = table["header"].index(name)
    return np.array([float(row[index]) for row in table["rows"]])


def test_experiment_mismatch(tmp_path):
    with pytest.raises(ConfigError):
        RatioExperiment(config("ou_kl", tmp_path))


def test_summary_before_run(tmp_path):
    experiment = OuKlExperiment(config("ou_kl", tmp_path))
    assert experiment.summary() is None
    assert experiment.get_execution_info() is None


def test_ou_kl_default(tmp_path):
    experiment = OuKlExperiment(config("ou_kl", tmp_path))
    written = experiment.run()

    assert names(written) == [
        "kl_alpha_0.5.csv",
        "kl_alpha_1.csv",
        "kl_alpha_2.csv",
        "kl_alpha_4.csv",
        "rates.csv",
    ]
    rates = read_csv(str(tmp_path / "rates.csv"))
    assert rates["provenance"] == f"# config_hash={experiment.cfg_hash} seed=0"
    assert column(rates, "expected_exponent").tolist() == pytest.approx(
        [0.5, 1.0, 2.0, 4.0 - np.sqrt(12.0)]
    )

    summary = experiment.summary()
    assert summary["alpha=2"]["expected"] == pytest.approx(2.0)
    assert summary["alpha=2"]["fitted"] == pytest.approx(2.0, rel=0.1)

    curve = read_csv(str(tmp_path / "kl_alpha_1.csv"))
    assert len(curve["rows"]) == 401
    assert experiment.get_execution_info()[-1]["node_name"] == "TOTAL RESULT"


def test_ou_kl_centred_start_doubles_the_exponent(tmp_path):
    experiment = OuKlExperiment(config("ou_kl", tmp_path, {"alphas": [2.0], "mean_offset": 0.0}))
    experiment.run()

    summary = experiment.summary()
    assert summary["alpha=2"]["expected"] == pytest.approx(4.0)
    assert summary["alpha=2"]["fitted"] == pytest.approx(4.0, rel=0.1)


def test_ratio_default(tmp_path):
    experiment = RatioExperiment(config("ratio", tmp_path))
    written = experiment.run()

    assert names(written) == ["abscissa_vs_alpha.csv", "eigenvalues_at_optimum.csv", "ratio.csv"]
    summary = experiment.summary()
    assert summary["alpha_star_closed_form"] == pytest.approx(np.sqrt(4.0 / 3.0))
    assert summary["alpha_star_search"] == pytest.approx(np.sqrt(4.0 / 3.0), abs=1e-3)

    ratio = read_csv(str(tmp_path / "ratio.csv"))
    assert ratio["header"][-1] == "alpha_star_closed_form"


def test_ratio_non_commuting(tmp_path):
    block = {"k_mat": [[2.0, 1.0], [1.0, 2.0]], "gamma": [[1.0, 0.0], [0.0, 2.0]]}
    experiment = RatioExperiment(config("ratio", tmp_path, block))
    experiment.run()

    assert "alpha_star_closed_form" not in experiment.summary()
    ratio = read_csv(str(tmp_path / "ratio.csv"))
    assert "alpha_star_closed_form" not in ratio["header"]
    assert len(read_csv(str(tmp_path / "eigenvalues_at_optimum.csv"))["rows"]) == 4


def test_aep_optimal_control(tmp_path):
    experiment = AepExperiment(config("aep", tmp_path, {"n_samples": 20_000}))
    written = experiment.run()

    assert names(written) == ["aep.csv", "fir.csv"]
    summary = experiment.summary()
    assert summary["closed_form"] == pytest.approx(0.0, abs=1e-12)
    assert summary["monte_carlo"] == pytest.approx(0.0, abs=1e-12)
    assert summary["verdict"] == "PASS"
    assert summary["monotone"]

    fir = read_csv(str(tmp_path / "fir.csv"))
    assert fir["header"] == ["t", "kl", "bound", "slack"]
    assert len(fir["rows"]) == 201
    assert column(fir, "kl")[-1] < column(fir, "kl")[0]


def test_aep_skew_perturbation(tmp_path):
    block = {"m": [[0.0, 0.5], [-0.5, 0.0]], "n_samples": 20_000}
    experiment = AepExperiment(config("aep", tmp_path, block, seed=3))
    experiment.run()

    summary = experiment.summary()
    assert summary["closed_form"] > 0.0
    assert abs(summary["z_score"]) < 4.0
    assert summary["monotone"] is None


def tiny_bistable(**overrides):
    block = {"n_steps": 10, "thin": 1, "max_lag": 5, "bins": 10}
    block.update(overrides)
    return block


def test_bistable_tiny(tmp_path):
    experiment = BistableExperiment(config("bistable", tmp_path, tiny_bistable()))
    written = experiment.run()

    assert names(written) == [
        "acf_controlled.csv",
        "acf_uncontrolled.csv",
        "histogram_controlled.csv",
        "histogram_uncontrolled.csv",
        "summary.csv",
        "trajectory_controlled.csv",
        "trajectory_uncontrolled.csv",
    ]
    trajectory = read_csv(str(tmp_path / "trajectory_controlled.csv"))
    assert trajectory["header"][:2] == ["t", "x0"]
    assert len(trajectory["header"]) == 1 + 2 * 11
    assert len(trajectory["rows"]) == 11

    acf = read_csv(str(tmp_path / "acf_controlled.csv"))
    assert acf["rows"][0] == ["0", "1"]
    assert len(acf["rows"]) == 6

    histogram = read_csv(str(tmp_path / "histogram_uncontrolled.csv"))
    assert len(histogram["rows"]) == 10

    summary = experiment.summary()
    assert set(summary) == {"controlled", "uncontrolled"}
    assert summary["controlled"]["transitions"] == 0


def test_bistable_replicas(tmp_path):
    experiment = BistableExperiment(config("bistable", tmp_path, tiny_bistable(n_seeds=3)))
    written = experiment.run()

    assert "transitions.csv" in names(written)
    transitions = read_csv(str(tmp_path / "transitions.csv"))
    assert transitions["header"] == ["seed", "controlled", "uncontrolled"]
    assert [row[0] for row in transitions["rows"]] == ["0", "1", "2"]


def test_bistable_is_deterministic(tmp_path):
    outputs = []
    for run in ("a", "b"):
        experiment = BistableExperiment(
            config("bistable", tmp_path / run, tiny_bistable(n_steps=200, thin=10), seed=11)
        )
        written = experiment.run()
        outputs.append({os.path.basename(p): open(p, "rb").read() for p in written})
    assert outputs[0] == outputs[1]


async def test_run_safe_async(tmp_path):
    experiment = RatioExperiment(config("ratio", tmp_path, {"n_grid": 20}))
    written = await experiment.run_safe_async()
    assert names(written) == ["abscissa_vs_alpha.csv", "eigenvalues_at_optimum.csv", "ratio.csv"]


def test_bistable_rescaled_clock_needs_hotter_simulation(tmp_path):
    block = tiny_bistable(beta_bar=6.0, beta=5.0)
    with pytest.raises(ConfigError, match="bistable"):
        BistableExperiment(config("bistable", tmp_path, block))

    block = tiny_bistable(beta_bar=6.0, beta=5.0, clock="physical")
    BistableExperiment(config("bistable", tmp_path, block)).run()


def test_bistable_clocks_share_the_uncontrolled_run(tmp_path):
    rows = {}
    for clock in ("rescaled", "physical"):
        block = tiny_bistable(n_steps=400, thin=20, clock=clock)
        experiment = BistableExperiment(config("bistable", tmp_path / clock, block, seed=3))
        experiment.run()
        rows[clock] = read_csv(str(tmp_path / clock / "trajectory_uncontrolled.csv"))["rows"]
    assert rows["rescaled"] == rows["physical"]


@pytest.mark.slow
def test_bistable_control_speeds_up_transitions(tmp_path):
    experiment = BistableExperiment(config("bistable", tmp_path, {"n_seeds": 20}, seed=1))
    experiment.run()

    transitions = read_csv(str(tmp_path / "transitions.csv"))
    controlled = column(transitions, "controlled")
    uncontrolled = column(transitions, "uncontrolled")
    assert len(controlled) == 20
    assert np.count_nonzero(controlled > uncontrolled) >= 18

    summary = experiment.summary()
    assert summary["controlled"]["pooled_well_balance"] <= 0.1
    assert summary["controlled"]["mean_transitions"] > summary["uncontrolled"]["mean_transitions"]


def test_lj_dimer_settles_at_pair_minimum(tmp_path):
    block = {
        "n_particles": 2,
        "betas": [100.0],
        "n_steps": 10_000,
        "thin": 100,
        "oracle_starts": 2,
        "oracle_steps": 2_000,
    }
    experiment = LjCoolExperiment(config("lj_cool", tmp_path, block))
    written = experiment.run()

    assert names(written) == ["energy_beta_100.csv", "final_beta_100.csv", "oracle.csv", "summary.csv"]
    row = experiment.summary()["100"]
    assert row["min_pair_distance"] == pytest.approx(2.0 ** (1.0 / 6.0), rel=0.02)
    assert row["last_quartile_mean"] == pytest.approx(-1.0, abs=0.05)
    assert row["oracle_best"] == pytest.approx(-1.0, abs=1e-8)

    final = read_csv(str(tmp_path / "final_beta_100.csv"))
    assert final["header"] == ["particle", "c0", "c1"]
    assert len(final["rows"]) == 2

    energy = read_csv(str(tmp_path / "energy_beta_100.csv"))
    assert energy["header"] == ["t", "energy", "wall"]
    assert np.all(column(energy, "wall") == 0.0)
    # the start keeps the pair about 2 sig apart
    assert -0.2 < column(energy, "energy")[0] < 0.0


@pytest.mark.slow
def test_lj_colder_target_has_lower_quieter_energy(tmp_path):
    block = {"n_steps": 20_000, "thin": 100, "oracle_starts": 0}
    experiment = LjCoolExperiment(config("lj_cool", tmp_path, block, seed=2))
    experiment.run()

    summary = experiment.summary()
    hot, cold = summary["1"], summary["100"]
    assert cold["last_quartile_mean"] < hot["last_quartile_mean"]
    assert cold["last_quartile_std"] < hot["last_quartile_std"]
    assert np.isnan(cold["oracle_best"])


@pytest.mark.slow
def test_lj_cold_runs_reach_the_descent_minimum(tmp_path):
    block = {"betas": [100.0], "n_steps": 40_000, "oracle_starts": 5}
    close = 0
    for seed in range(10):
        experiment = LjCoolExperiment(config("lj_cool", tmp_path / str(seed), block, seed=seed))
        experiment.run()
        row = experiment.summary()["100"]
        if abs(row["gap_to_oracle"]) <= 0.1 * abs(row["oracle_best"]):
            close += 1
    assert close >= 8


@pytest.mark.slow
def test_limits_fixed_sim_temp_slope(tmp_path):
    block = {"regime": "fixed_sim_temp", "horizon": 0.5, "replicas": 30}
    experiment = LimitsExperiment(config("limits", tmp_path, block, seed=5))
    written = experiment.run()

    assert names(written) == ["limits.csv", "slope.csv", "sup_errors.csv"]
    summary = experiment.summary()
    assert 0.35 < summary["slope"] < 0.75
    rms = list(summary["rms_sup_error"].values())
    assert np.all(np.diff(rms) < 0.0)


def test_limits_fixed_target_temp_without_slope(tmp_path):
    block = {
        "regime": "fixed_target_temp",
        "beta": 2.0,
        "eps": [0.2, 0.1, 0.05],
        "horizon": 0.5,
        "replicas": 6,
    }
    experiment = LimitsExperiment(config("limits", tmp_path, block, seed=5))
    written = experiment.run()

    assert names(written) == ["limits.csv", "sup_errors.csv"]
    summary = experiment.summary()
    assert summary["slope"] is None
    rms = list(summary["rms_sup_error"].values())
    assert np.all(np.diff(rms) < 0.0)

    sup_errors = read_csv(str(tmp_path / "sup_errors.csv"))
    assert len(sup_errors["rows"]) == 6 * 3


@pytest.mark.slow
def test_limits_fixed_target_temp_errors_shrink_per_replica(tmp_path):
    block = {"regime": "fixed_target_temp", "eps": [0.2, 0.1, 0.05], "replicas": 20}
    experiment = LimitsExperiment(config("limits", tmp_path, block, seed=2))
    experiment.run()

    sup_errors = read_csv(str(tmp_path / "sup_errors.csv"))
    replica = column(sup_errors, "replica")
    eps = column(sup_errors, "eps")
    error = column(sup_errors, "sup_error")
    shrinking = 0
    for r in np.unique(replica):
        rows = replica == r
        by_eps = error[rows][np.argsort(-eps[rows])]
        shrinking += bool(np.all(np.diff(by_eps) < 0.0))
    assert shrinking >= 18
