"""
EntropyProductionNode Module
"""

from typing import List, Optional

from ..analysis.entropy import aep_rate_monte_carlo
from ..integrators.noise import NoiseStream
from ..models.system import aep_rate
from .base_node import BaseNode


class EntropyProductionNode(BaseNode):
    """
    Asymptotic entropy production rate of the configured control, in closed
    form and by Monte Carlo over the stationary velocity law.

    Args:
        input (str): ``"params & seed"``.
        output (List[str]): One key, receiving
            ``{"closed_form", "monte_carlo", "stderr", "z_score"}``.
        node_config (Optional[dict]): Unused beyond ``verbose``.
        node_name (str): Defaults to ``"EntropyProduction"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "EntropyProduction",
    ):
        super().__init__(node_name, "node", input, output, 2, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        params, seed = self.get_inputs(state).values()
        system = params.system()
        closed_form = aep_rate(system)
        mean, stderr = aep_rate_monte_carlo(
            system, params.n_samples, NoiseStream(seed, system.dimension)
        )
        diff = mean - closed_form
        z_score = 0.0 if diff == 0.0 else (diff / stderr if stderr > 0.0 else float("inf"))

        self.logger.info(
            f"R(B) = {closed_form:.8g}; Monte Carlo {mean:.8g} +- {stderr:.3g} (z={z_score:.3g})"
        )
        return self.update_state(
            state,
            {"closed_form": closed_form, "monte_carlo": mean, "stderr": stderr, "z_score": z_score},
        )
