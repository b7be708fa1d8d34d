"""
CoolingReportNode Module
"""

from typing import List, Optional

import numpy as np

from .base_node import BaseNode


def last_quartile(values) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    return values[(3 * values.shape[0]) // 4 :]


class CoolingReportNode(BaseNode):
    """
    Energy traces and final configurations of the cooling runs, compared
    with the best minimum found by the multi-start descent oracle.

    Tables:
        ``energy_beta_<beta>.csv`` (``t,energy,wall``: the Lennard-Jones
        energy and the container term apart), ``final_beta_<beta>.csv``
        (``particle,c0,...``), ``oracle.csv`` (``start,energy``) and
        ``summary.csv`` with, per run, the final energy and wall term, the
        mean and standard deviation of the energy over the last quartile of
        records, the last-quartile mean of the smallest pair distance, the
        oracle's best energy and the gap to it.

    Args:
        input (str): ``"params & runs & oracle"``.
        output (List[str]): One key, receiving the summary rows as dicts.
        node_config (Optional[dict]): Unused beyond ``verbose``.
        node_name (str): Defaults to ``"CoolingReport"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "CoolingReport",
    ):
        super().__init__(node_name, "node", input, output, 3, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        params, runs, oracle = self.get_inputs(state).values()
        oracle_best = min((o["energy"] for o in oracle), default=float("nan"))
        tables = {}
        summary = []

        for run in runs:
            label = format(float(run["beta"]), "g")
            tables[f"energy_beta_{label}.csv"] = (
                ["t", "energy", "wall"],
                np.column_stack([run["times"], run["energy"], run["wall"]]),
            )
            final = np.asarray(run["final"]).reshape(params.n_particles, params.dim)
            tables[f"final_beta_{label}.csv"] = (
                ["particle"] + [f"c{k}" for k in range(params.dim)],
                [[i, *row] for i, row in enumerate(final.tolist())],
            )

            tail = last_quartile(run["energy"])
            row = {
                "beta": run["beta"],
                "final_energy": float(run["energy"][-1]),
                "final_wall_energy": float(run["wall"][-1]),
                "last_quartile_mean": float(tail.mean()),
                "last_quartile_std": float(tail.std()),
                "min_pair_distance": float(last_quartile(run["min_pair"]).mean()),
                "oracle_best": oracle_best,
                "gap_to_oracle": float(run["energy"][-1]) - oracle_best,
            }
            self.logger.info(
                f"beta={label}: final energy {row['final_energy']:.6g}, "
                f"last-quartile std {row['last_quartile_std']:.3g}, oracle best {oracle_best:.6g}"
            )
            summary.append(row)

        tables["oracle.csv"] = (["start", "energy"], [[o["start"], o["energy"]] for o in oracle])
        tables["summary.csv"] = (
            list(summary[0]) if summary else ["beta"],
            [list(row.values()) for row in summary],
        )

        self.add_tables(state, tables)
        return self.update_state(state, summary)
