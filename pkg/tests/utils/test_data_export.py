"""
Tests for the CSV and JSON writers.
"""


import numpy as np
import pytest

from langevingraph.utils.data_export import (
    config_hash,
    export_to_csv,
    format_value,
    read_csv,
    to_builtin,
)


def test_config_hash_ignores_key_order():
    assert config_hash({"a": 1, "b": [1, 2]}) == config_hash({"b": [1, 2], "a": 1})
    assert config_hash({"a": 1}) != config_hash({"a": 2})
    assert len(config_hash({})) == 64


def test_format_value():
    assert format_value(0.1) == "0.10000000000000001"
    assert format_value(3) == "3"
    assert format_value(np.int64(7)) == "7"
    assert format_value(True) == "1"
    assert format_value(None) == ""
    assert format_value("controlled") == "controlled"
    assert float(format_value(np.pi)) == np.pi


def test_export_to_csv_writes_provenance(tmp_path):
    path = tmp_path / "sub" / "out.csv"
    written = export_to_csv([[0.0, 1.5], [1, 2.0 / 3.0]], ["t", "kl"], str(path), "abc", 7)
    assert written == str(path)

    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "# config_hash=abc seed=7"
    assert lines[1] == "t,kl"
    assert lines[2] == "0,1.5"
    assert float(lines[3].split(",")[1]) == 2.0 / 3.0

    table = read_csv(str(path))
    assert table["provenance"] == "# config_hash=abc seed=7"
    assert table["header"] == ["t", "kl"]
    assert len(table["rows"]) == 2


def test_export_to_csv_rejects_ragged_rows(tmp_path):
    with pytest.raises(ValueError):
        export_to_csv([[1.0]], ["a", "b"], str(tmp_path / "bad.csv"), "abc")


def test_to_builtin_converts_numpy():
    value = to_builtin({1.0: (np.bool_(True), np.array([[1.0]]), np.int32(3))})
    assert value == {"1.0": [True, [[1.0]], 3]}
    assert isinstance(value["1.0"][0], bool)
