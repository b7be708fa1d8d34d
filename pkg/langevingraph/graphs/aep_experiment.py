"""
AepExperiment Module
"""

from typing import Optional

from ..nodes import EntropyProductionNode, ExportNode, FIRCheckNode
from .abstract_experiment import AbstractExperiment
from .base_graph import BaseGraph


class AepExperiment(AbstractExperiment):
    """
    Entropy production of a control on a quadratic potential: the rate in
    closed form and by Monte Carlo, and the integrated bound on the
    relative entropy along a Gaussian evolution.
    """

    experiment = "aep"

    def _create_graph(self) -> BaseGraph:
        entropy_node = EntropyProductionNode(input="params & seed", output=["aep"])
        fir_node = FIRCheckNode(input="params & aep", output=["fir"])
        export_node = ExportNode(
            input="tables", output=["written_files"], node_config=self.export_config()
        )

        return BaseGraph(
            nodes=[entropy_node, fir_node, export_node],
            edges=[(entropy_node, fir_node), (fir_node, export_node)],
            entry_point=entropy_node,
            graph_name=self.__class__.__name__,
        )

    def summary(self) -> Optional[dict]:
        if self.final_state is None:
            return None
        report = self.final_state["fir"]
        return {
            **self.final_state["aep"],
            "max_violation": report.max_violation,
            "monotone": report.monotone,
            "verdict": report.verdict,
        }
