"""
ClosedFormRatioNode Module
"""

from typing import List, Optional

from ..spectral.ratio import diagonalize_commuting, optimal_ratio_commuting
from .base_node import BaseNode


class ClosedFormRatioNode(BaseNode):
    """
    Optimal ratio from the closed form for commuting ``K`` and ``gamma``.

    Only reached through the conditional branch that checked commutation.

    Args:
        input (str): Expression selecting a ``RatioParams`` block.
        output (List[str]): One key, receiving ``alpha_star``.
        node_config (Optional[dict]): Unused beyond ``verbose``.
        node_name (str): Defaults to ``"ClosedFormRatio"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "ClosedFormRatio",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        params = next(iter(self.get_inputs(state).values()))
        k_diag, g_diag, _ = diagonalize_commuting(params.k_mat, params.gamma)
        alpha_star = optimal_ratio_commuting(k_diag, g_diag)

        self.logger.info(f"closed form: alpha*={alpha_star:.8g}")
        return self.update_state(state, alpha_star)
