"""
data_export module
This module writes experiment results to CSV files.

Every file starts with a provenance comment line
``# config_hash=<sha256> seed=<seed>`` and floats are written with 17
significant digits so reruns are byte-identical.
"""

import csv
import hashlib
import json
import os
from numbers import Integral, Real
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np

from .logging import get_logger

logger = get_logger(__name__)

FLOAT_FORMAT = ".17g"


def config_hash(config: Dict[str, Any]) -> str:
    """
    SHA-256 of the canonical JSON form of a configuration (sorted keys).
    """
    payload = json.dumps(config, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def provenance_line(cfg_hash: str, seed: Optional[int]) -> str:
    return f"# config_hash={cfg_hash} seed={seed}"


def format_value(value: Any) -> str:
    """
    Render one CSV cell: integers verbatim, floats at 17 significant digits.
    """
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, Integral):
        return str(int(value))
    if isinstance(value, Real):
        return format(float(value), FLOAT_FORMAT)
    if value is None:
        return ""
    return str(value)


def export_to_csv(
    rows: Iterable[Sequence[Any]],
    header: List[str],
    filename: str,
    cfg_hash: str,
    seed: Optional[int] = None,
) -> str:
    """
    Export rows to a CSV file.

    :param rows: Iterable of row sequences, each the length of ``header``
    :param header: Column names
    :param filename: Name of the file to save the CSV data
    :param cfg_hash: Configuration hash recorded in the provenance line
    :param seed: Seed recorded in the provenance line
    :return: The path written
    """
    directory = os.path.dirname(filename)
    if directory:
        os.makedirs(directory, exist_ok=True)

    with open(filename, "w", newline="", encoding="utf-8") as f:
        f.write(provenance_line(cfg_hash, seed) + "\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            if len(row) != len(header):
                raise ValueError(
                    f"row has {len(row)} cells, header has {len(header)} ({filename})"
                )
            writer.writerow([format_value(v) for v in row])

    logger.info(f"Data exported to {filename}")
    return filename


def read_csv(filename: str) -> Dict[str, Any]:
    """
    Read a file written by :func:`export_to_csv`.

    Returns:
        dict: ``{"provenance": str, "header": list, "rows": list[list[str]]}``
    """
    with open(filename, newline="", encoding="utf-8") as f:
        provenance = f.readline().rstrip("\n")
        reader = csv.reader(f)
        header = next(reader)
        rows = [row for row in reader]
    return {"provenance": provenance, "header": header, "rows": rows}


def to_builtin(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): to_builtin(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_builtin(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_builtin(value.tolist())
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value
