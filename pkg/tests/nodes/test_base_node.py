"""
Tests for the BaseNode input expressions and state updates.
"""

import pytest

from langevingraph.nodes.base_node import BaseNode
from langevingraph.utils.errors import ValidationError


class DummyNode(BaseNode):
    def execute(self, state):
        return self.update_state(state, *self.get_inputs(state).values())


@pytest.fixture
def state():
    return {"params": 1, "pairs": 2, "seed": 3}


def make(expression, output=None, min_input_len=1):
    return DummyNode("Dummy", "node", expression, output or ["out"], min_input_len)


@pytest.mark.parametrize(
    "expression, expected",
    [
        ("params", ["params"]),
        ("params & pairs", ["params", "pairs"]),
        ("missing | pairs", ["pairs"]),
        ("params & missing | seed", ["seed"]),
        ("(missing | params) & seed", ["params", "seed"]),
        ("params & params", ["params"]),
    ],
)
def test_input_expressions(state, expression, expected):
    assert make(expression).get_input_keys(state) == expected


@pytest.mark.parametrize(
    "expression",
    ["", "& params", "params |", "params && pairs", "(params & pairs", "params pairs", "missing"],
)
def test_invalid_expressions(state, expression):
    with pytest.raises(ValidationError):
        make(expression).get_input_keys(state)


def test_min_input_len(state):
    with pytest.raises(ValidationError):
        make("params", min_input_len=2).get_input_keys(state)


def test_update_state_checks_arity(state):
    node = make("params & pairs", output=["a", "b"])
    assert node.execute(dict(state))["b"] == 2
    with pytest.raises(ValidationError):
        make("params & pairs", output=["a"]).execute(dict(state))


def test_add_tables_merges():
    state = {}
    BaseNode.add_tables(state, {"a.csv": (["x"], [[1]])})
    BaseNode.add_tables(state, {"b.csv": (["y"], [[2]])})
    assert sorted(state["tables"]) == ["a.csv", "b.csv"]


def test_update_config_respects_existing_values():
    node = DummyNode("Dummy", "node", "params", ["out"], node_config={"batchsize": 2})
    node.update_config({"batchsize": 8, "verbose": True})
    assert node.node_config["batchsize"] == 2
    node.update_config({"batchsize": 8}, overwrite=True)
    assert node.node_config["batchsize"] == 8


def test_unknown_node_type():
    with pytest.raises(ValidationError):
        DummyNode("Dummy", "branch", "params", ["out"])
