"""
__init__.py file for node folder module
"""

from .base_node import BaseNode
from .bistable_diagnostics_node import BistableDiagnosticsNode
from .closed_form_ratio_node import ClosedFormRatioNode
from .conditional_node import ConditionalNode
from .cooling_report_node import CoolingReportNode
from .ensemble_node import EnsembleNode
from .entropy_production_node import EntropyProductionNode
from .export_node import ExportNode
from .fir_check_node import FIRCheckNode
from .kl_decay_node import KLDecayNode
from .limit_errors_node import LimitErrorsNode
from .linear_model_node import LinearModelNode
from .ratio_report_node import RatioReportNode
from .ratio_scan_node import RatioScanNode
from .replica_plan_node import ReplicaPlanNode

__all__ = [
    # Base nodes
    "BaseNode",
    "ConditionalNode",
    # Ensemble nodes
    "ReplicaPlanNode",
    "EnsembleNode",
    # Linear model nodes
    "LinearModelNode",
    "KLDecayNode",
    "RatioScanNode",
    "ClosedFormRatioNode",
    "RatioReportNode",
    # Simulation report nodes
    "BistableDiagnosticsNode",
    "CoolingReportNode",
    "LimitErrorsNode",
    # Entropy nodes
    "EntropyProductionNode",
    "FIRCheckNode",
    # Output
    "ExportNode",
]
