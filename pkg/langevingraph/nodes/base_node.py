"""
This module defines the base node class of the experiment graphs.
"""

import re
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from ..utils.errors import ValidationError
from ..utils.logging import get_logger

NODE_TYPES = ("node", "conditional_node")


class BaseNode(ABC):
    """
    An abstract base class for the steps of an experiment graph.

    A node reads the state keys selected by its ``input`` expression, does
    one piece of work and writes the keys listed in ``output``.

    Attributes:
        node_name (str): The unique identifier name for the node.
        input (str): Boolean expression over state keys, e.g. ``"params & pairs"``
            or ``"trajectories | runs"``.
        output (List[str]): State keys written by the node.
        min_input_len (int): Minimum number of input keys that must resolve.
        node_config (dict): Node options.
        logger (logging.Logger): The library logger.

    Args:
        node_name (str): Name for identifying the node.
        node_type (str): Either ``"node"`` or ``"conditional_node"``.
        input (str): Expression defining the input keys needed from the state.
        output (List[str]): Output keys to be updated in the state.
        min_input_len (int, optional): Defaults to 1.
        node_config (Optional[dict], optional): Defaults to an empty dict.

    Raises:
        ValidationError: If ``node_type`` is not one of the allowed types.

    Example:
        >>> class Double(BaseNode):
        ...     def execute(self, state):
        ...         state["y"] = 2 * state["x"]
        ...         return state
        ...
        >>> Double("Double", "node", "x", ["y"]).execute({"x": 1})
        {'x': 1, 'y': 2}
    """

    def __init__(
        self,
        node_name: str,
        node_type: str,
        input: str,
        output: List[str],
        min_input_len: int = 1,
        node_config: Optional[dict] = None,
    ):
        if node_type not in NODE_TYPES:
            raise ValidationError(
                f"node_type must be 'node' or 'conditional_node', got '{node_type}'"
            )
        self.node_name = node_name
        self.node_type = node_type
        self.input = input
        self.output = output
        self.min_input_len = min_input_len
        self.node_config = node_config or {}
        self.verbose = self.node_config.get("verbose", False)
        self.logger = get_logger(__name__)

    @abstractmethod
    def execute(self, state: dict) -> dict:
        """
        Execute the node's logic based on the current state and update it accordingly.

        Args:
            state (dict): The current state of the graph.

        Returns:
            dict: The updated state.
        """

        pass

    def update_config(self, params: dict, overwrite: bool = False):
        """
        Set shared parameters as node attributes and node options.

        Args:
            params (dict): Parameters shared by every node of a graph.
            overwrite (bool): Replace values the node already defines.
        """
        for key, val in params.items():
            if not overwrite and (hasattr(self, key) or key in self.node_config):
                continue
            setattr(self, key, val)
            self.node_config[key] = val

    def get_input_keys(self, state: dict) -> List[str]:
        """
        Resolve the input expression against the state.

        Raises:
            ValidationError: If the expression is malformed or matches fewer
                than ``min_input_len`` keys.
        """
        try:
            input_keys = self._parse_input_keys(state, self.input)
        except ValidationError as e:
            raise ValidationError(f"Error parsing input keys for {self.node_name}: {e}") from e
        if len(input_keys) < self.min_input_len:
            raise ValidationError(
                f"{self.node_name} requires at least {self.min_input_len} input keys, "
                f"got {len(input_keys)}"
            )
        return input_keys

    def get_inputs(self, state: dict) -> Dict[str, Any]:
        """
        Input values keyed by state key, in expression order.
        """
        return {key: state[key] for key in self.get_input_keys(state)}

    def update_state(self, state: dict, *values) -> dict:
        """
        Write ``values`` to the output keys, in order.
        """
        if len(values) != len(self.output):
            raise ValidationError(
                f"{self.node_name} produced {len(values)} values for outputs {self.output}"
            )
        state.update(dict(zip(self.output, values)))
        return state

    @staticmethod
    def add_tables(state: dict, tables: Dict[str, tuple]) -> None:
        """
        Register ``{filename: (header, rows)}`` for the export node.
        """
        state.setdefault("tables", {}).update(tables)

    def _parse_input_keys(self, state: dict, expression: str) -> List[str]:
        """
        Evaluate an input expression.

        ``&`` requires every operand, ``|`` takes the first alternative that
        fully resolves and parentheses group. The keys of the first
        satisfied alternative are returned, without duplicates.

        Raises:
            ValidationError: If the expression is malformed or nothing matches.
        """
        if not expression or not expression.strip():
            raise ValidationError("Empty expression.")

        if state and re.search(
            r"\b(" + "|".join(re.escape(k) for k in state) + r")\s+\b(" + "|".join(re.escape(k) for k in state) + r")\b",
            expression,
        ):
            raise ValidationError("Adjacent state keys found without an operator between them.")

        expr = expression.replace(" ", "")
        if expr[0] in "&|" or expr[-1] in "&|" or re.search(r"[&|]{2}", expr):
            raise ValidationError("Invalid operator usage.")
        if expr.count("(") != expr.count(")"):
            raise ValidationError("Missing or unbalanced parentheses in expression.")

        def resolve(flat: str) -> List[str]:
            for alternative in flat.split("|"):
                keys = [k for k in alternative.split("&") if k]
                if keys and all(k in state for k in keys):
                    return keys
            return []

        while "(" in expr:
            start = expr.rfind("(")
            end = expr.find(")", start)
            if end < 0:
                raise ValidationError("Missing or unbalanced parentheses in expression.")
            expr = expr[:start] + "|".join(resolve(expr[start + 1 : end])) + expr[end + 1 :]

        result = resolve(expr)
        if not result:
            raise ValidationError(
                f"No state keys matched the expression {expression!r}. "
                f"State contains keys: {', '.join(state.keys())}"
            )
        return list(dict.fromkeys(result))
