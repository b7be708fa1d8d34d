"""
AbstractExperiment Module
"""

import asyncio
import os
from abc import ABC, abstractmethod
from typing import List, Optional, Union

from ..helpers.config_schemas import ExperimentConfig, validate_config
from ..utils.data_export import config_hash
from ..utils.errors import ConfigError
from ..utils.logging import get_logger, set_verbosity_info

logger = get_logger(__name__)


class AbstractExperiment(ABC):
    """
    Scaffolding class for creating an experiment graph and executing it.

    Attributes:
        config (ExperimentConfig): The validated configuration.
        params: The experiment's parameter block (defaults filled in).
        seed (int): Root seed of every random stream of the run.
        output_dir (str): Directory receiving the CSV files.
        cfg_hash (str): SHA-256 of the canonical configuration.
        verbose (bool): A flag indicating whether to log node progress.

    Args:
        config (Union[ExperimentConfig, dict]): A validated config or a raw
            dictionary, validated here.

    Example:
        >>> class MyExperiment(AbstractExperiment):
        ...     experiment = "ou_kl"
        ...     def _create_graph(self):
        ...         # Implementation of graph creation here
        ...         return graph
        ...
        >>> files = MyExperiment({"experiment": "ou_kl"}).run()
    """

    experiment: str = ""

    def __init__(self, config: Union[ExperimentConfig, dict]):
        if not isinstance(config, ExperimentConfig):
            config = validate_config(config)
        if self.experiment and config.experiment != self.experiment:
            raise ConfigError(
                f"{self.__class__.__name__} runs '{self.experiment}', "
                f"config is for '{config.experiment}'",
                "experiment",
            )

        self.config = config
        self.params = config.params
        self.seed = config.seed
        self.output_dir = config.output_dir
        self.cfg_hash = config_hash(config.canonical())
        self.verbose = config.verbose

        if self.verbose:
            set_verbosity_info()

        self.graph = self._create_graph()
        self.final_state = None
        self.execution_info = None

        common_params = {"verbose": self.verbose, "batchsize": config.batchsize}
        self.set_common_params(common_params, overwrite=True)

    def set_common_params(self, params: dict, overwrite=False):
        """
        Pass parameters to every node in the graph unless otherwise defined in the graph.

        Args:
            params (dict): Common parameters and their values.
        """

        for node in self.graph.nodes:
            node.update_config(params, overwrite)

    def export_config(self) -> dict:
        """
        Options of the export node shared by every experiment.
        """
        return {"output_dir": self.output_dir, "cfg_hash": self.cfg_hash, "seed": self.seed}

    def get_execution_info(self):
        """
        Returns the execution information of the graph.

        Returns:
            list: One ``{"node_name", "exec_time"}`` dict per executed node,
            then the total.
        """

        return self.execution_info

    @abstractmethod
    def _create_graph(self):
        """
        Abstract method to create a graph representation.
        """

    def run(self) -> List[str]:
        """
        Execute the graph from ``{"params", "seed"}``.

        Returns:
            List[str]: Paths of the written CSV files.
        """
        os.makedirs(self.output_dir, exist_ok=True)
        inputs = {"params": self.params, "seed": self.seed}
        self.final_state, self.execution_info = self.graph.execute(inputs)
        return self.final_state.get("written_files", [])

    async def run_safe_async(self) -> List[str]:
        """
        Runs the experiment in the default executor of the running loop.

        Returns:
            List[str]: Paths of the written CSV files.
        """

        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(None, self.run)

    def summary(self) -> Optional[dict]:
        """
        Short result of the run for the console, None before :meth:`run`.
        """
        return None
