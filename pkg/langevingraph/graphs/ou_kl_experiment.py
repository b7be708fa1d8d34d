"""
OuKlExperiment Module
"""

from typing import Optional

from ..nodes import ExportNode, KLDecayNode, LinearModelNode
from .abstract_experiment import AbstractExperiment
from .base_graph import BaseGraph


class OuKlExperiment(AbstractExperiment):
    """
    Relative entropy to equilibrium of the linear model, one curve per
    temperature ratio, with the fitted and spectral decay rates.

    Example:
        >>> files = OuKlExperiment({"experiment": "ou_kl", "output_dir": "out"}).run()
    """

    experiment = "ou_kl"

    def _create_graph(self) -> BaseGraph:
        linear_model_node = LinearModelNode(input="params", output=["pairs"])
        kl_decay_node = KLDecayNode(input="params & pairs", output=["curves", "rates"])
        export_node = ExportNode(
            input="tables", output=["written_files"], node_config=self.export_config()
        )

        return BaseGraph(
            nodes=[linear_model_node, kl_decay_node, export_node],
            edges=[
                (linear_model_node, kl_decay_node),
                (kl_decay_node, export_node),
            ],
            entry_point=linear_model_node,
            graph_name=self.__class__.__name__,
        )

    def summary(self) -> Optional[dict]:
        if self.final_state is None:
            return None
        return {
            f"alpha={alpha:g}": {"expected": expected, "fitted": fitted}
            for alpha, _, expected, fitted, _ in self.final_state["rates"]
        }
