"""
RatioReportNode Module
"""

from typing import List, Optional

import numpy as np

from .base_node import BaseNode


class RatioReportNode(BaseNode):
    """
    Summarises the ratio search in ``ratio.csv``.

    Columns are ``alpha_star_search,rate,trace_rate_bound,abscissa_bound``,
    followed by ``alpha_star_closed_form`` when the closed form ran. The
    abscissa bound is half the trace rate bound. A second table,
    ``eigenvalues_at_optimum.csv``, lists the spectrum at the searched ratio.

    Args:
        input (str): ``"search & closed_form | search"``.
        output (List[str]): One key, receiving the summary row as a dict.
        node_config (Optional[dict]): Unused beyond ``verbose``.
        node_name (str): Defaults to ``"RatioReport"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "RatioReport",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        inputs = list(self.get_inputs(state).values())
        search = inputs[0]
        closed_form = inputs[1] if len(inputs) > 1 else None

        summary = {
            "alpha_star_search": search["alpha_star"],
            "rate": search["rate"],
            "trace_rate_bound": search["trace_rate_bound"],
            "abscissa_bound": 0.5 * search["trace_rate_bound"],
        }
        if closed_form is not None:
            summary["alpha_star_closed_form"] = closed_form

        eig = np.asarray(search["eigenvalues"])
        order = np.lexsort((eig.imag, eig.real))
        self.add_tables(
            state,
            {
                "ratio.csv": (list(summary), [list(summary.values())]),
                "eigenvalues_at_optimum.csv": (
                    ["real", "imag"],
                    np.column_stack([eig.real[order], eig.imag[order]]),
                ),
            },
        )
        return self.update_state(state, summary)
