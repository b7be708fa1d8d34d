"""
FIRCheckNode Module
"""

from typing import List, Optional

from ..analysis.entropy import fir_check
from .base_node import BaseNode


class FIRCheckNode(BaseNode):
    """
    Checks the integrated entropy-production bound along the evolution of a
    Gaussian initial law and writes the entropy tables.

    Tables:
        ``fir.csv`` (``t,kl,bound,slack``) and ``aep.csv`` with the closed
        form rate, the Monte-Carlo estimate, its standard error, the z score,
        the largest violation of the bound and the verdict.

    Args:
        input (str): ``"params & aep"``.
        output (List[str]): One key, receiving the ``FIRReport``.
        node_config (Optional[dict]): Unused beyond ``verbose``.
        node_name (str): Defaults to ``"FIRCheck"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "FIRCheck",
    ):
        super().__init__(node_name, "node", input, output, 2, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        params, aep = self.get_inputs(state).values()
        report = fir_check(params.system(), params.potential(), params.sigma0(), params.times())

        self.add_tables(
            state,
            {
                "fir.csv": (["t", "kl", "bound", "slack"], report.to_rows()),
                "aep.csv": (
                    [
                        "rate_closed_form",
                        "rate_monte_carlo",
                        "stderr",
                        "z_score",
                        "max_violation",
                        "verdict",
                    ],
                    [
                        [
                            aep["closed_form"],
                            aep["monte_carlo"],
                            aep["stderr"],
                            aep["z_score"],
                            report.max_violation,
                            report.verdict,
                        ]
                    ],
                ),
            },
        )
        return self.update_state(state, report)
