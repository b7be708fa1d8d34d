"""
LimitErrorsNode Module
"""

from typing import List, Optional

import numpy as np

from ..analysis.series import eps_scaling_slope
from .base_node import BaseNode

MIN_SLOPE_POINTS = 4


class LimitErrorsNode(BaseNode):
    """
    Aggregates the pathwise errors of the scaled dynamics against their limit.

    The error of one replica at one ``eps`` is the largest Euclidean distance
    between the two position paths over the common record times; replicas
    are combined by root mean square. The log-log slope of the RMS error
    against ``eps`` is fitted when at least four values of ``eps`` were run.

    Tables:
        ``limits.csv`` (``eps,rms_sup_error``), ``sup_errors.csv``
        (``replica,eps,sup_error``) and, with enough points, ``slope.csv``
        (``regime,slope,n_eps``).

    Args:
        input (str): ``"params & results"``.
        output (List[str]): ``[rms_key, slope_key]``; the slope is None
            when it was not fitted.
        node_config (Optional[dict]): Unused beyond ``verbose``.
        node_name (str): Defaults to ``"LimitErrors"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "LimitErrors",
    ):
        super().__init__(node_name, "node", input, output, 2, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        params, results = self.get_inputs(state).values()
        eps = np.asarray(params.eps, dtype=float)
        errors = np.array([r["errors"] for r in results], dtype=float)
        rms = np.sqrt(np.mean(errors**2, axis=0))

        tables = {
            "limits.csv": (["eps", "rms_sup_error"], np.column_stack([eps, rms])),
            "sup_errors.csv": (
                ["replica", "eps", "sup_error"],
                [
                    [r["index"], e, err]
                    for r in results
                    for e, err in zip(params.eps, r["errors"])
                ],
            ),
        }

        slope = None
        if eps.shape[0] >= MIN_SLOPE_POINTS:
            slope = eps_scaling_slope(eps, rms)
            self.logger.info(f"{params.regime}: error ~ eps^{slope:.4g}")
            tables["slope.csv"] = (
                ["regime", "slope", "n_eps"],
                [[params.regime, slope, eps.shape[0]]],
            )
        else:
            self.logger.warning(
                f"{eps.shape[0]} eps values given; the slope needs {MIN_SLOPE_POINTS}"
            )

        self.add_tables(state, tables)
        return self.update_state(state, rms, slope)
