"""
ReplicaPlanNode Module
"""

from typing import Callable, List, Optional

from ..utils.errors import ValidationError
from .base_node import BaseNode


class ReplicaPlanNode(BaseNode):
    """
    Turns the parameter block and the seed into ensemble member payloads.

    The ``plan`` callable receives the input values in expression order and
    returns one list of payloads per output key (a bare list when there is a
    single output). Payloads carry everything a member needs, including its
    replica index, so the ensemble tasks stay pure functions.

    Args:
        input (str): e.g. ``"params & seed"``.
        output (List[str]): Keys receiving the payload lists.
        node_config (dict): ``plan`` (callable, required).
        node_name (str): Defaults to ``"ReplicaPlan"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "ReplicaPlan",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

        self.plan: Optional[Callable] = self.node_config.get("plan")
        if self.plan is None:
            raise ValidationError(f"{node_name} needs a 'plan' callable in its node_config")

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        planned = self.plan(*self.get_inputs(state).values())
        if len(self.output) == 1:
            planned = (planned,)

        for key, members in zip(self.output, planned):
            self.logger.info(f"{self.node_name}: {len(members)} members for '{key}'")
        return self.update_state(state, *planned)
