"""
EnsembleNode Module
"""

import asyncio
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional

from tqdm.asyncio import tqdm

from ..utils.errors import ValidationError
from .base_node import BaseNode

DEFAULT_BATCHSIZE = 16


class EnsembleNode(BaseNode):
    """
    Runs one task per ensemble member concurrently and gathers the results
    in member order.

    Each member is a payload from the input list; the task receives it and
    returns one result. Tasks run in worker threads under a semaphore of
    ``batchsize`` slots. Members derive their randomness from their own
    payload (seed and replica index), so results do not depend on the
    number of workers or on completion order.

    Args:
        input (str): Expression selecting the list of member payloads.
        output (List[str]): One key, receiving the list of results.
        node_config (dict): ``task`` (callable, required), ``batchsize``
            and ``verbose`` (shows a progress bar).
        node_name (str): Defaults to ``"Ensemble"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "Ensemble",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

        self.task: Optional[Callable] = self.node_config.get("task")
        if self.task is None:
            raise ValidationError(f"{node_name} needs a 'task' callable in its node_config")

    def execute(self, state: dict) -> dict:
        """
        Run the task on every payload of the input list.

        Returns:
            dict: The state with the output key holding the ordered results.
        """
        batchsize = self.node_config.get("batchsize", DEFAULT_BATCHSIZE)

        self.logger.info(
            f"--- Executing {self.node_name} Node with batchsize {batchsize} ---"
        )

        try:
            eventloop = asyncio.get_running_loop()
        except RuntimeError:
            eventloop = None

        if eventloop is not None:
            # asyncio.run cannot nest; give the ensemble its own loop in a helper thread
            results = self._run_in_thread(state, batchsize)
        else:
            results = asyncio.run(self._async_execute(state, batchsize))

        return self.update_state(state, results)

    def _run_in_thread(self, state: dict, batchsize: int) -> list:
        with ThreadPoolExecutor(max_workers=1) as pool:
            return pool.submit(asyncio.run, self._async_execute(state, batchsize)).result()

    async def _async_execute(self, state: dict, batchsize: int) -> list:
        """
        Gather the task results with at most ``batchsize`` running at once.
        """
        members = next(iter(self.get_inputs(state).values()))
        semaphore = asyncio.Semaphore(max(1, int(batchsize)))

        async def _async_run(payload):
            async with semaphore:
                return await asyncio.to_thread(self.task, payload)

        futures = [_async_run(payload) for payload in members]
        return await tqdm.gather(
            *futures, desc=f"running {self.node_name}", disable=not self.verbose
        )
