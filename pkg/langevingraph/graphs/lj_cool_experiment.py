"""
LjCoolExperiment Module
"""

from typing import List, Optional, Tuple

import numpy as np

from ..integrators.baoab import simulate_controlled
from ..integrators.limits import rk4_gradient_flow
from ..integrators.noise import NoiseStream
from ..integrators.trajectory import IntegratorSpec
from ..models.system import PhaseState
from ..nodes import CoolingReportNode, EnsembleNode, ExportNode, ReplicaPlanNode
from ..utils.logging import get_logger
from .abstract_experiment import AbstractExperiment
from .base_graph import BaseGraph

logger = get_logger(__name__)

MAX_START_DRAWS = 100

INIT_KEY = 0
RUN_KEY = 1
ORACLE_KEY = 2


def clear_start(potential, params, key: Tuple[int, ...], seed: int) -> np.ndarray:
    """
    Jittered lattice start with no pair closer than ``sig``.

    Closer pairs make the descent too stiff for the oracle step size, so
    such draws are rejected; after ``MAX_START_DRAWS`` rejections the
    unperturbed lattice is used.
    """
    rng = NoiseStream(seed, potential.dimension, key=key).generator
    for _ in range(MAX_START_DRAWS):
        x = potential.lattice_configuration(params.spacing, params.jitter, rng)
        if float(np.min(potential.pair_distances(x))) >= params.sig:
            return x
    logger.warning_once(f"no clear jittered start after {MAX_START_DRAWS} draws; using the lattice")
    return potential.lattice_configuration(params.spacing, 0.0)


def plan_cooling(params, seed: int) -> Tuple[List[dict], List[dict]]:
    """
    One member per target temperature, all from the same start, and one
    member per oracle start.
    """
    potential = params.potential()
    init = clear_start(potential, params, (INIT_KEY,), seed)
    runs = [
        {"index": i, "beta": beta, "seed": seed, "params": params, "init": init}
        for i, beta in enumerate(params.betas)
    ]
    oracle = [
        {"start": j, "params": params, "init": clear_start(potential, params, (ORACLE_KEY, j), seed)}
        for j in range(params.oracle_starts)
    ]
    return runs, oracle


def run_cooling(payload: dict) -> dict:
    params = payload["params"]
    potential = params.potential()
    system = params.system(payload["beta"])
    spec = IntegratorSpec(
        scheme="baoab_controlled", dt=params.dt, n_steps=params.n_steps, thin=params.thin
    )
    noise = NoiseStream(payload["seed"], potential.dimension, key=(RUN_KEY,))
    traj = simulate_controlled(PhaseState.at_rest(payload["init"]), system, potential, spec, noise)

    return {
        "beta": payload["beta"],
        "times": traj.times,
        "energy": np.array([potential.pair_energy(x) for x in traj.x]),
        "wall": np.array([potential.wall_energy(x) for x in traj.x]),
        "min_pair": np.array([np.min(potential.pair_distances(x)) for x in traj.x]),
        "final": traj.x[-1],
    }


def descend(payload: dict) -> dict:
    """
    Gradient flow with unit mobility from one oracle start; the cooling
    friction does not enter the oracle.
    """
    params = payload["params"]
    potential = params.potential()
    steps = params.oracle_steps
    spec = IntegratorSpec(
        scheme="rk4_gradient_flow", dt=params.oracle_dt, n_steps=steps, thin=max(steps, 1)
    )
    traj = rk4_gradient_flow(payload["init"], potential, np.eye(potential.dimension), spec)
    return {"start": payload["start"], "energy": potential.pair_energy(traj.x[-1])}


class LjCoolExperiment(AbstractExperiment):
    """
    Lennard-Jones cluster cooled by the controlled dynamics at a fixed
    simulation temperature and two target temperatures.

    The energy traces are compared with the lowest minimum a multi-start
    gradient descent finds.
    """

    experiment = "lj_cool"

    def _create_graph(self) -> BaseGraph:
        plan_node = ReplicaPlanNode(
            input="params & seed",
            output=["run_members", "oracle_members"],
            node_config={"plan": plan_cooling},
        )
        runs_node = EnsembleNode(
            input="run_members",
            output=["runs"],
            node_config={"task": run_cooling},
            node_name="CoolingRuns",
        )
        oracle_node = EnsembleNode(
            input="oracle_members",
            output=["oracle"],
            node_config={"task": descend},
            node_name="DescentOracle",
        )
        report_node = CoolingReportNode(input="params & runs & oracle", output=["summary"])
        export_node = ExportNode(
            input="tables", output=["written_files"], node_config=self.export_config()
        )

        return BaseGraph(
            nodes=[plan_node, runs_node, oracle_node, report_node, export_node],
            edges=[
                (plan_node, runs_node),
                (runs_node, oracle_node),
                (oracle_node, report_node),
                (report_node, export_node),
            ],
            entry_point=plan_node,
            graph_name=self.__class__.__name__,
        )

    def summary(self) -> Optional[dict]:
        if self.final_state is None:
            return None
        return {format(row["beta"], "g"): row for row in self.final_state["summary"]}
