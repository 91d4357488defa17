"""
row_factory.py

Provides centralized factories for output rows, ensuring a consistent
structure and number formatting for every CSV the planner writes.
"""

from typing import Dict, List

from .candidate_sets import MulticastPlan
from .geometry import Scenario
from .utils import format_sig

PLAN_COLUMNS = (
    "strategy", "set_index", "first", "last", "node_ids",
    "theta_rad", "set_delay_s", "total_delay_s", "avg_throughput_bps",
)


def create_sweep_row(
    axis_name: str,
    axis_value: float,
    strategy: str,
    trials: int,
    mean_delay: float,
    mean_throughput: float,
    mean_solver_time: float,
    digits: int = 9,
) -> Dict[str, str]:
    """
    Creates one sweep CSV row.

    Args:
        axis_name (str): The swept parameter (e.g., 'gps_error').
        axis_value (float): Its value at this point, in file units (bits, m, s).
        strategy (str): The strategy tag (e.g., 'greedy').
        trials (int): Number of trials averaged.
        mean_delay (float): Mean total delay in seconds.
        mean_throughput (float): Mean average throughput in bits/s.
        mean_solver_time (float): Mean solver wall time in seconds.
        digits (int): Significant digits for floats.

    Returns:
        Dict[str, str]: Column name to formatted cell.
    """
    if axis_name == "node_count":
        value_cell = str(int(axis_value))
    else:
        value_cell = format_sig(axis_value, digits)
    return {
        "axis_name": axis_name,
        "axis_value": value_cell,
        "strategy": strategy,
        "trials": str(trials),
        "mean_delay_s": format_sig(mean_delay, digits),
        "mean_avg_throughput_bps": format_sig(mean_throughput, digits),
        "mean_solver_time_s": format_sig(mean_solver_time, digits),
    }


def create_plan_rows(plan: MulticastPlan, scenario: Scenario, average_throughput: float,
                     digits: int = 9) -> List[Dict[str, str]]:
    """Creates one CSV row per set of a plan; plan totals repeat on each row."""
    rows = []
    for index, s in enumerate(plan.sets):
        ids = [scenario.nodes[i].id for i in s.indices]
        rows.append({
            "strategy": plan.strategy,
            "set_index": str(index),
            "first": str(s.first),
            "last": str(s.last),
            "node_ids": " ".join(str(i) for i in ids),
            "theta_rad": format_sig(s.theta, digits),
            "set_delay_s": format_sig(s.delay, digits),
            "total_delay_s": format_sig(plan.total_delay, digits),
            "avg_throughput_bps": format_sig(average_throughput, digits),
        })
    return rows
