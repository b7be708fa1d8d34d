"""
Module for implementing the conditional node
"""

from typing import List, Optional

from ..utils.errors import ValidationError
from .base_node import BaseNode


class ConditionalNode(BaseNode):
    """
    Branching node: picks the next node from the graph state.

    The graph wires exactly two outgoing edges; the first target runs when
    ``key_name`` is present and truthy in the state, the second otherwise.

    Args:
        input (str): Boolean expression defining the input keys needed from the state.
        output (List[str]): Unused; kept for the common node signature.
        node_config (dict): ``key_name`` (required).
        node_name (str): Defaults to ``"Cond"``.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "Cond",
    ):
        super().__init__(node_name, "conditional_node", input, output, 1, node_config)

        if "key_name" not in self.node_config:
            raise ValidationError("ConditionalNode needs 'key_name' in its node_config")
        self.key_name = self.node_config["key_name"]
        self.true_node_name = None
        self.false_node_name = None

    def execute(self, state: dict) -> str:
        """
        Returns:
            str: The name of the node to run next.
        """
        if self.true_node_name is None:
            raise ValidationError(f"{self.node_name}: next nodes are not set")

        self.logger.info(f"--- Executing {self.node_name} Node ---")
        taken = bool(state.get(self.key_name))

        self.logger.info(f"{self.node_name}: condition on '{self.key_name}' is {taken}")
        return self.true_node_name if taken else self.false_node_name
