"""
KLDecayNode Module
"""

from typing import List, Optional

import numpy as np

from ..analysis.gaussian import kl_decay_curve
from ..analysis.series import fit_exponential_rate
from ..spectral.linear_model import decay_rate
from ..utils.errors import DataError
from .base_node import BaseNode


def alpha_label(alpha: float) -> str:
    return format(float(alpha), "g")


class KLDecayNode(BaseNode):
    """
    Tracks ``KL(rho_t | rho_inf)`` of a Gaussian initial law for every
    assembled linear model and fits its exponential decay rate.

    A centred initial law has a divergence quadratic in the covariance gap,
    so its exponent is twice the spectral rate ``2r``; with a mean offset the
    linear mean term dominates and the exponent is ``2r`` itself. Both the
    expected and the fitted exponent are reported.

    Tables:
        ``kl_alpha_<alpha>.csv`` with ``t,kl`` and ``rates.csv`` with
        ``alpha,spectral_rate,expected_exponent,fitted_rate,r_squared``.

    Args:
        input (str): Expression selecting the parameter block and the pairs,
            e.g. ``"params & pairs"``.
        output (List[str]): ``[curves_key, rates_key]``.
        node_config (Optional[dict]): Unused beyond ``verbose``.
        node_name (str): Defaults to ``"KLDecay"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "KLDecay",
    ):
        super().__init__(node_name, "node", input, output, 2, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        params, pairs = self.get_inputs(state).values()
        times = params.times()
        sigma0 = params.sigma0()
        mean0 = params.initial_mean()
        centred = mean0 is None

        curves, rates, tables = {}, [], {}
        for alpha, pair in pairs.items():
            curve = kl_decay_curve(pair, sigma0, times, mean0)
            spectral = decay_rate(pair)
            expected = 2.0 * spectral if centred else spectral
            try:
                fit = fit_exponential_rate(curve, params.fit_window, params.kl_floor)
                fitted, r_squared = fit.rate, fit.r_squared
            except DataError as e:
                self.logger.warning(f"alpha={alpha:g}: no rate fit ({e})")
                fitted, r_squared = float("nan"), float("nan")

            self.logger.info(
                f"alpha={alpha:g}: expected exponent {expected:.6g}, fitted {fitted:.6g}"
            )
            curves[alpha] = curve
            rates.append([alpha, spectral, expected, fitted, r_squared])
            tables[f"kl_alpha_{alpha_label(alpha)}.csv"] = (["t", "kl"], curve.to_rows())

        tables["rates.csv"] = (
            ["alpha", "spectral_rate", "expected_exponent", "fitted_rate", "r_squared"],
            rates,
        )
        self.add_tables(state, tables)
        return self.update_state(state, curves, rates)
