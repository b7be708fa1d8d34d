"""
ExportNode Module
"""

import os
from typing import List, Optional

import numpy as np

from ..utils.data_export import export_to_csv
from ..utils.errors import ValidationError
from .base_node import BaseNode


class ExportNode(BaseNode):
    """
    Writes every table registered in the state to ``output_dir``.

    Each file starts with the provenance line carrying the configuration
    hash and the seed. Files are written in sorted name order.

    Args:
        input (str): ``"tables"``.
        output (List[str]): One key, receiving the list of written paths.
        node_config (dict): ``output_dir``, ``cfg_hash`` (both required)
            and ``seed``.
        node_name (str): Defaults to ``"Export"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "Export",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

        missing = [k for k in ("output_dir", "cfg_hash") if k not in self.node_config]
        if missing:
            raise ValidationError(f"{node_name} node_config lacks {', '.join(missing)}")

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        tables = next(iter(self.get_inputs(state).values()))
        output_dir = self.node_config["output_dir"]
        cfg_hash = self.node_config["cfg_hash"]
        seed = self.node_config.get("seed")

        written = []
        for filename in sorted(tables):
            header, rows = tables[filename]
            if isinstance(rows, np.ndarray):
                rows = rows.tolist()
            written.append(
                export_to_csv(rows, header, os.path.join(output_dir, filename), cfg_hash, seed)
            )

        self.logger.info(f"{self.node_name}: wrote {len(written)} files to {output_dir}")
        return self.update_state(state, written)
