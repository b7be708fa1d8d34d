"""
LimitsExperiment Module
"""

import math
from typing import List, Optional

import numpy as np

from ..integrators.baoab import max_scaled_dt, simulate_scaled
from ..integrators.limits import euler_maruyama_overdamped, rk4_gradient_flow
from ..integrators.noise import NoiseStream
from ..integrators.trajectory import IntegratorSpec
from ..models.system import PhaseState
from ..nodes import EnsembleNode, ExportNode, LimitErrorsNode, ReplicaPlanNode
from .abstract_experiment import AbstractExperiment
from .base_graph import BaseGraph


def common_grid(params) -> tuple:
    """
    ``(dt, n_steps)`` resolving the smallest ``eps`` and landing exactly on
    the horizon; every ``eps`` and the limit share this grid.
    """
    dt_max = min(max_scaled_dt(e, params.gamma) for e in params.eps)
    n_steps = math.ceil(params.horizon / dt_max)
    return params.horizon / n_steps, n_steps


def plan_replicas(params, seed: int) -> List[dict]:
    dt, n_steps = common_grid(params)
    return [
        {"index": i, "seed": seed, "params": params, "dt": dt, "n_steps": n_steps}
        for i in range(params.replicas)
    ]


def run_replica(payload: dict) -> dict:
    """
    Sup-path error of every ``eps`` against the limit equation.

    Each path, the stochastic limit included, is driven by a fresh copy of
    the replica's noise stream, so all of them see the same increments.
    """
    params = payload["params"]
    index, seed = payload["index"], payload["seed"]
    dt, n_steps = payload["dt"], payload["n_steps"]
    potential = params.potential()
    n = potential.dimension
    x0 = np.asarray(params.x0, dtype=float)
    noise_matrix = params.noise_matrix()

    if params.regime == "fixed_sim_temp":
        spec = IntegratorSpec(scheme="rk4_gradient_flow", dt=dt, n_steps=n_steps)
        limit = rk4_gradient_flow(x0, potential, params.gamma, spec)
    else:
        spec = IntegratorSpec(scheme="euler_maruyama_overdamped", dt=dt, n_steps=n_steps)
        limit = euler_maruyama_overdamped(
            x0, potential, params.gamma, noise_matrix, spec, NoiseStream(seed, n, key=(index,))
        )

    spec = IntegratorSpec(scheme="scaled_underdamped", dt=dt, n_steps=n_steps)
    errors = []
    for eps in params.eps:
        traj = simulate_scaled(
            PhaseState.at_rest(x0),
            potential,
            params.gamma,
            noise_matrix,
            eps,
            params.regime,
            spec,
            NoiseStream(seed, n, key=(index,)),
        )
        errors.append(float(np.max(np.linalg.norm(traj.x - limit.x, axis=1))))

    return {"index": index, "errors": errors}


class LimitsExperiment(AbstractExperiment):
    """
    Pathwise convergence of the scaled dynamics to their limit as ``eps``
    shrinks, in either temperature regime.
    """

    experiment = "limits"

    def _create_graph(self) -> BaseGraph:
        plan_node = ReplicaPlanNode(
            input="params & seed", output=["members"], node_config={"plan": plan_replicas}
        )
        ensemble_node = EnsembleNode(
            input="members", output=["results"], node_config={"task": run_replica}
        )
        errors_node = LimitErrorsNode(input="params & results", output=["rms", "slope"])
        export_node = ExportNode(
            input="tables", output=["written_files"], node_config=self.export_config()
        )

        return BaseGraph(
            nodes=[plan_node, ensemble_node, errors_node, export_node],
            edges=[
                (plan_node, ensemble_node),
                (ensemble_node, errors_node),
                (errors_node, export_node),
            ],
            entry_point=plan_node,
            graph_name=self.__class__.__name__,
        )

    def summary(self) -> Optional[dict]:
        if self.final_state is None:
            return None
        return {
            "rms_sup_error": dict(zip(self.params.eps, self.final_state["rms"].tolist())),
            "slope": self.final_state["slope"],
        }
