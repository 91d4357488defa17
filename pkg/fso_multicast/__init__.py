"""
FSO Multicast Planner - minimum-delay multicast for free-space-optical links

Plans which receivers share a widened beam and which get their own, given
adjustable beam divergence, GPS uncertainty and transmitter realignment
delay, and evaluates the strategies with seeded Monte-Carlo sweeps.
"""

__version__ = "1.0.1"
__author__ = "FSO Multicast Planner Team"

from .main import main
from .geometry import NodePosition, PolarNode, Scenario, azimuth, covering_angle, to_polar_sorted, uncertainty_half_angle
from .fso_link import FsoLinkParams, data_rate, dbm_to_watts, received_power
from .candidate_sets import ContiguousSet, MulticastPlan, SolverConfig, enumerate_sets, set_delay
from .solvers import (
    SOLVERS, plan_metrics, solve, solve_exact_bnb, solve_exact_dp, solve_exhaustive,
    solve_greedy, solve_multiple_unicast, solve_naive_broadcast,
)
from .simulator import SimParams, SweepResult, TrialResult, generate_scenario, run_sweep, run_trial
from .config import *
from .exceptions import *

__all__ = [
    'main',
    'NodePosition', 'PolarNode', 'Scenario',
    'azimuth', 'covering_angle', 'to_polar_sorted', 'uncertainty_half_angle',
    'FsoLinkParams', 'data_rate', 'dbm_to_watts', 'received_power',
    'ContiguousSet', 'MulticastPlan', 'SolverConfig', 'enumerate_sets', 'set_delay',
    'SOLVERS', 'plan_metrics', 'solve', 'solve_exact_bnb', 'solve_exact_dp', 'solve_exhaustive',
    'solve_greedy', 'solve_multiple_unicast', 'solve_naive_broadcast',
    'SimParams', 'SweepResult', 'TrialResult', 'generate_scenario', 'run_sweep', 'run_trial',
]
