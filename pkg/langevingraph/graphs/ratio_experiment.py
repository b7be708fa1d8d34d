"""
RatioExperiment Module
"""

from typing import Optional

from ..nodes import (
    ClosedFormRatioNode,
    ConditionalNode,
    ExportNode,
    RatioReportNode,
    RatioScanNode,
)
from .abstract_experiment import AbstractExperiment
from .base_graph import BaseGraph


class RatioExperiment(AbstractExperiment):
    """
    Optimal temperature ratio of the linear model.

    The abscissa scan and the numeric search always run; the closed form is
    added only when ``K`` and ``gamma`` commute.
    """

    experiment = "ratio"

    def _create_graph(self) -> BaseGraph:
        scan_node = RatioScanNode(input="params", output=["scan", "search", "commuting"])
        cond_node = ConditionalNode(
            input="commuting",
            output=["commuting"],
            node_config={"key_name": "commuting"},
            node_name="CommutingCond",
        )
        closed_form_node = ClosedFormRatioNode(input="params", output=["closed_form"])
        report_node = RatioReportNode(
            input="search & closed_form | search", output=["summary"]
        )
        export_node = ExportNode(
            input="tables", output=["written_files"], node_config=self.export_config()
        )

        return BaseGraph(
            nodes=[scan_node, cond_node, closed_form_node, report_node, export_node],
            edges=[
                (scan_node, cond_node),
                (cond_node, closed_form_node),
                (cond_node, report_node),
                (closed_form_node, report_node),
                (report_node, export_node),
            ],
            entry_point=scan_node,
            graph_name=self.__class__.__name__,
        )

    def summary(self) -> Optional[dict]:
        if self.final_state is None:
            return None
        return self.final_state["summary"]
