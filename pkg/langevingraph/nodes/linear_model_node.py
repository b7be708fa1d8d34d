"""
LinearModelNode Module
"""

from typing import List, Optional

from ..spectral.linear_model import assemble, decay_rate
from .base_node import BaseNode


class LinearModelNode(BaseNode):
    """
    Assembles the drift/noise pair of the linear model once per temperature
    ratio of the parameter block.

    Args:
        input (str): Expression selecting the parameter block (an
            ``OuKlParams``).
        output (List[str]): One key, receiving ``{alpha: DriftNoisePair}``
            in the configured order.
        node_config (Optional[dict]): Unused beyond ``verbose``.
        node_name (str): Defaults to ``"LinearModel"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "LinearModel",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        params = next(iter(self.get_inputs(state).values()))
        template = params.template()

        pairs = {}
        for alpha in params.alphas:
            pair = assemble(template.at(alpha))
            self.logger.info(f"alpha={alpha:g}: spectral rate 2r={decay_rate(pair):.6g}")
            pairs[alpha] = pair

        return self.update_state(state, pairs)
