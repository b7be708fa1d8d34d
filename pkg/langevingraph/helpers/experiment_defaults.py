"""
Desk-scale defaults of every experiment block
"""

experiment_defaults = {
    "ou_kl": {
        "k_mat": [[1.0]],
        "gamma": [[1.0]],
        "beta": 1.0,
        "sigma0_scale": 0.1,
        "mean0": None,
        "mean_offset": 1.0,
        "alphas": [0.5, 1.0, 2.0, 4.0],
        "t_max": 20.0,
        "n_times": 401,
        "fit_window": [10.0, 20.0],
        "kl_floor": 1e-200,
    },
    "ratio": {
        "k_mat": [[1.0, 0.0], [0.0, 1.0]],
        "gamma": [[1.0, 0.0], [0.0, 2.0]],
        "beta": 1.0,
        "alpha_min": 0.05,
        "alpha_max": 10.0,
        "n_grid": 400,
        "tol": 1e-6,
    },
    "bistable": {
        "d": 10,
        "k": 1.0,
        "gamma_diag": 0.04,
        "gamma_offdiag": 0.02,
        "beta_bar": 1.0,
        "beta": 5.0,
        "dt": 5e-3,
        "n_steps": 1_000_000,
        "thin": 200,
        "n_seeds": 1,
        "clock": "rescaled",
        "init_q": -1.0,
        "band": 0.5,
        "bins": 50,
        "hist_range": [-2.0, 2.0],
        "max_lag": 50,
    },
    "lj_cool": {
        "n_particles": 7,
        "dim": 2,
        "eps": 1.0,
        "sig": 1.0,
        "container_radius": 3.0,
        "container_stiffness": 10.0,
        "gamma": 0.1,
        "beta_bar": 1.0,
        "betas": [1.0, 100.0],
        "dt": 5e-3,
        "n_steps": 200_000,
        "thin": 200,
        "spacing": None,
        "jitter": 0.1,
        "oracle_starts": 50,
        "oracle_dt": 1e-3,
        "oracle_steps": 20_000,
    },
    "limits": {
        "regime": "fixed_sim_temp",
        "k_mat": [[1.0]],
        "gamma": [[1.0]],
        "beta_bar": 1.0,
        "beta": 1.0,
        "x0": [1.0],
        "eps": [0.2, 0.1, 0.05, 0.025],
        "horizon": 1.0,
        "replicas": 50,
    },
    "aep": {
        "k_mat": [[1.0, 0.0], [0.0, 2.0]],
        "gamma": [[1.0, 0.0], [0.0, 1.0]],
        "beta_bar": 1.0,
        "beta": 2.0,
        "m": None,
        "b": None,
        "sigma0_scale": 0.1,
        "t_max": 10.0,
        "n_times": 201,
        "n_samples": 100_000,
    },
}
