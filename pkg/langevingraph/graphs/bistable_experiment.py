"""
BistableExperiment Module
"""

from typing import List, Optional

import numpy as np

from ..analysis.series import count_transitions, well_balance
from ..integrators.baoab import simulate_controlled, simulate_scaled
from ..integrators.noise import NoiseStream
from ..integrators.trajectory import IntegratorSpec, Trajectory
from ..models.system import PhaseState
from ..nodes import BistableDiagnosticsNode, EnsembleNode, ExportNode, ReplicaPlanNode
from .abstract_experiment import AbstractExperiment
from .base_graph import BaseGraph


def plan_seeds(params, seed: int) -> List[dict]:
    return [{"index": i, "seed": seed, "params": params} for i in range(params.n_seeds)]


def simulate_run(init: PhaseState, system, potential, params, noise: NoiseStream) -> Trajectory:
    """
    One run of the comparison, on the clock selected by ``params.clock``.
    """
    eps = system.beta_bar / system.beta
    if params.clock == "physical" or eps == 1.0:
        spec = IntegratorSpec(
            scheme="baoab_controlled", dt=params.dt, n_steps=params.n_steps, thin=params.thin
        )
        return simulate_controlled(init, system, potential, spec, noise)
    spec = IntegratorSpec(
        scheme="scaled_underdamped", dt=params.dt, n_steps=params.n_steps, thin=params.thin
    )
    return simulate_scaled(
        init, potential, system.gamma, system.sigma, eps, "fixed_sim_temp", spec, noise
    )


def run_seed(payload: dict) -> dict:
    """
    Controlled and uncontrolled runs of one replica, driven by the same
    noise stream from the same initial state.
    """
    params = payload["params"]
    index = payload["index"]
    potential = params.potential()
    n = potential.dimension
    init = PhaseState.at_rest(np.full(n, params.init_q))

    result = {
        "index": index,
        "transitions": {},
        "well_balance": {},
        "well_offset": {},
        "trajectories": None,
    }
    trajectories = {}
    for run, system in params.systems().items():
        noise = NoiseStream(payload["seed"], n, key=(index,))
        traj = simulate_run(init, system, potential, params, noise)
        q = traj.positions(0)
        result["transitions"][run] = count_transitions(q, params.band)
        result["well_balance"][run] = well_balance(q)
        result["well_offset"][run] = well_balance(q, signed=True)
        trajectories[run] = traj

    if index == 0:
        result["trajectories"] = trajectories
    return result


class BistableExperiment(AbstractExperiment):
    """
    Coupled double well sampled at the target temperature with and without
    a hotter simulation temperature.

    Every replica runs both systems on one noise stream; the first replica's
    trajectories are written out in full.
    """

    experiment = "bistable"

    def _create_graph(self) -> BaseGraph:
        plan_node = ReplicaPlanNode(
            input="params & seed", output=["members"], node_config={"plan": plan_seeds}
        )
        ensemble_node = EnsembleNode(
            input="members", output=["results"], node_config={"task": run_seed}
        )
        diagnostics_node = BistableDiagnosticsNode(input="params & results", output=["summary"])
        export_node = ExportNode(
            input="tables", output=["written_files"], node_config=self.export_config()
        )

        return BaseGraph(
            nodes=[plan_node, ensemble_node, diagnostics_node, export_node],
            edges=[
                (plan_node, ensemble_node),
                (ensemble_node, diagnostics_node),
                (diagnostics_node, export_node),
            ],
            entry_point=plan_node,
            graph_name=self.__class__.__name__,
        )

    def summary(self) -> Optional[dict]:
        if self.final_state is None:
            return None
        return self.final_state["summary"]
