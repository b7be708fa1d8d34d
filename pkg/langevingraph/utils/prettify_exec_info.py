"""
Prettify the execution information of the graph.
"""

from typing import Union


def prettify_exec_info(
    complete_result: list[dict], as_string: bool = True
) -> Union[str, list[dict]]:
    """
    Formats the execution information of an experiment graph showing node timings.

    Args:
        complete_result (list[dict]): The execution information, one dict per node
            with ``node_name`` and ``exec_time`` keys, the last being the total.
        as_string (bool, optional): If True, returns a formatted string table.
                                  If False, returns the original list. Defaults to True.

    Returns:
        Union[str, list[dict]]: A formatted string table if as_string=True,
        otherwise the original list of dictionaries.
    """
    if not as_string:
        return complete_result

    if not complete_result:
        return "Empty result"

    total = sum(item["exec_time"] for item in complete_result[:-1]) or 1.0

    lines = []
    lines.append("Node Statistics:")
    lines.append("-" * 52)
    lines.append(f"{'Node':<30} {'Time (s)':<10} {'Share':<10}")
    lines.append("-" * 52)

    for item in complete_result:
        node = item["node_name"]
        time = f"{item['exec_time']:.2f}"
        share = f"{100.0 * item['exec_time'] / total:.1f}%"
        lines.append(f"{node:<30} {time:<10} {share:<10}")

    return "\n".join(lines)
