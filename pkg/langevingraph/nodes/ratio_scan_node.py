"""
RatioScanNode Module
"""

from typing import List, Optional

import numpy as np

from ..spectral.linear_model import assemble, trace_rate_bound
from ..spectral.ratio import abscissa_scan, commutes, eigenvalues_at, optimal_ratio_search
from .base_node import BaseNode


class RatioScanNode(BaseNode):
    """
    Scans the spectral abscissa of ``A(alpha)`` on a grid and searches its
    minimiser.

    Writes ``abscissa_vs_alpha.csv`` (``alpha,abscissa,re_0,...``) and the
    state keys ``[scan, search, commuting]``; ``search`` holds ``alpha_star``,
    the rate ``2r``, the eigenvalues at ``alpha_star`` and the trace bound.

    Args:
        input (str): Expression selecting a ``RatioParams`` block.
        output (List[str]): ``[scan_key, search_key, commuting_key]``.
        node_config (Optional[dict]): Unused beyond ``verbose``.
        node_name (str): Defaults to ``"RatioScan"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "RatioScan",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        params = next(iter(self.get_inputs(state).values()))
        template = params.template()
        alphas = np.linspace(params.alpha_min, params.alpha_max, params.n_grid)

        scan = abscissa_scan(template, alphas)
        alpha_star, rate = optimal_ratio_search(
            template, (params.alpha_min, params.alpha_max), params.tol, params.n_grid
        )
        bound = trace_rate_bound(assemble(template.at(alpha_star)))
        search = {
            "alpha_star": alpha_star,
            "rate": rate,
            "eigenvalues": eigenvalues_at(template, alpha_star),
            "trace_rate_bound": bound,
        }
        commuting = commutes(params.k_mat, params.gamma)

        self.logger.info(
            f"search: alpha*={alpha_star:.8g}, rate={rate:.8g}, "
            f"trace bound={bound:.8g}, commuting={commuting}"
        )

        n_re = scan["real_parts"].shape[1]
        header = ["alpha", "abscissa"] + [f"re_{i}" for i in range(n_re)]
        rows = np.column_stack([scan["alpha"], scan["abscissa"], scan["real_parts"]])
        self.add_tables(state, {"abscissa_vs_alpha.csv": (header, rows)})

        return self.update_state(state, scan, search, commuting)
