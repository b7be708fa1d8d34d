"""
BistableDiagnosticsNode Module
"""

from typing import List, Optional

import numpy as np

from ..analysis.series import autocorrelation, histogram_marginal
from .base_node import BaseNode

RUNS = ("controlled", "uncontrolled")


class BistableDiagnosticsNode(BaseNode):
    """
    Tables of the double-well comparison.

    The first replica's trajectories give, per run, the thinned trajectory,
    the density of the metastable coordinate ``q = x0`` and the
    autocorrelation of the first velocity component. Transition counts and
    well balances come from every replica.

    Tables:
        ``trajectory_<run>.csv``, ``histogram_<run>.csv``
        (``bin_left,bin_right,density``), ``acf_<run>.csv`` (``lag,acf``),
        ``summary.csv`` (``run,transitions,well_balance``) and, for more than
        one replica, ``transitions.csv`` (``seed,controlled,uncontrolled``,
        the seed column being the replica index). With several replicas each
        run summary also carries the mean transition count and the well
        balance of all replicas pooled.

    Args:
        input (str): ``"params & results"``.
        output (List[str]): One key, receiving the per-run summary.
        node_config (Optional[dict]): Unused beyond ``verbose``.
        node_name (str): Defaults to ``"BistableDiagnostics"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "BistableDiagnostics",
    ):
        super().__init__(node_name, "node", input, output, 2, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        params, results = self.get_inputs(state).values()
        first = results[0]
        tables, summary = {}, {}

        for run in RUNS:
            traj = first["trajectories"][run]
            tables[f"trajectory_{run}.csv"] = (traj.header(), traj.to_rows())

            edges, densities = histogram_marginal(traj, 0, params.bins, params.hist_range)
            tables[f"histogram_{run}.csv"] = (
                ["bin_left", "bin_right", "density"],
                np.column_stack([edges[:-1], edges[1:], densities]),
            )

            velocity = traj.velocities(0)
            max_lag = min(params.max_lag, velocity.shape[0] - 1)
            if max_lag < params.max_lag:
                self.logger.warning(
                    f"{run}: only {velocity.shape[0]} records, autocorrelation cut at lag {max_lag}"
                )
            acf = autocorrelation(velocity, max_lag)
            tables[f"acf_{run}.csv"] = (["lag", "acf"], [[s, c] for s, c in enumerate(acf)])

            summary[run] = {
                "transitions": first["transitions"][run],
                "well_balance": first["well_balance"][run],
            }
            self.logger.info(
                f"{run}: {summary[run]['transitions']} transitions, "
                f"well balance {summary[run]['well_balance']}"
            )

        tables["summary.csv"] = (
            ["run", "transitions", "well_balance"],
            [[run, s["transitions"], s["well_balance"]] for run, s in summary.items()],
        )

        if len(results) > 1:
            rows = [
                [r["index"], r["transitions"]["controlled"], r["transitions"]["uncontrolled"]]
                for r in results
            ]
            wins = sum(1 for _, c, u in rows if c > u)
            self.logger.info(f"controlled run has more transitions for {wins}/{len(rows)} seeds")
            tables["transitions.csv"] = (["seed", "controlled", "uncontrolled"], rows)
            for run in RUNS:
                pooled = abs(float(np.mean([r["well_offset"][run] for r in results])))
                summary[run]["pooled_well_balance"] = pooled
                summary[run]["mean_transitions"] = float(
                    np.mean([r["transitions"][run] for r in results])
                )

        self.add_tables(state, tables)
        return self.update_state(state, summary)
