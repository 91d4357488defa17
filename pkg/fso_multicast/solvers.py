"""
solvers.py

Multicast planning strategies. Every solver takes a Scenario and a
SolverConfig and returns a MulticastPlan covering all nodes.
"""

import math
from typing import Callable, Dict, List, Tuple

from .candidate_sets import (
    ContiguousSet,
    MulticastPlan,
    SolverConfig,
    build_plan,
    enumerate_sets,
    make_set,
    require_singletons,
    set_delay,
    unicast_transmission_delay,
)
from .config import (
    STRATEGY_BROADCAST,
    STRATEGY_EXACT_BNB,
    STRATEGY_EXACT_DP,
    STRATEGY_EXHAUSTIVE,
    STRATEGY_GREEDY,
    STRATEGY_MULTI_UNICAST,
)
from .cover_search import CoverSearch, ExhaustiveCover
from .decorators import timed
from .exceptions import InfeasibleScenarioError, InfeasibleSetError
from .geometry import Scenario, covering_angle

# =============================================================================
# EXACT SOLVERS
# =============================================================================

def solve_exact_dp(scenario: Scenario, config: SolverConfig) -> MulticastPlan:
    """
    Minimum-delay partition into contiguous sets.

    Set delay only grows when a set is extended, so some optimal cover is a
    partition; best[b] is the cheapest partition of nodes 0..b-1.
    """
    require_singletons(scenario, config)
    n = len(scenario)
    ending_at: List[List[ContiguousSet]] = [[] for _ in range(n)]
    for s in enumerate_sets(scenario, config):
        ending_at[s.last].append(s)

    best = [0.0] + [math.inf] * n
    choice: List[ContiguousSet] = [None] * (n + 1)
    for boundary in range(1, n + 1):
        for s in ending_at[boundary - 1]:
            candidate = best[s.first] + s.delay
            if candidate < best[boundary]:
                best[boundary] = candidate
                choice[boundary] = s

    sets = []
    boundary = n
    while boundary > 0:
        s = choice[boundary]
        sets.append(s)
        boundary = s.first
    return build_plan(sets, STRATEGY_EXACT_DP, config, {"states": n + 1})


def solve_exact_bnb(scenario: Scenario, config: SolverConfig) -> MulticastPlan:
    """
    Minimum-delay cover by branch and bound over all enumerated sets,
    overlaps allowed. The incumbent starts from the greedy plan, or from
    multiple unicast when greedy cannot produce one.
    """
    require_singletons(scenario, config)
    sets = enumerate_sets(scenario, config)
    try:
        incumbent = solve_greedy(scenario, config).sets
    except InfeasibleScenarioError:
        incumbent = solve_multiple_unicast(scenario, config).sets
    search = CoverSearch(len(scenario), sets, incumbent=incumbent)
    chosen = search.run()
    return build_plan(chosen, STRATEGY_EXACT_BNB, config, {
        "candidate_sets": len(sets),
        "nodes_explored": search.nodes_explored,
        "incumbent_updates": search.incumbent_updates,
    })


def solve_exhaustive(scenario: Scenario, config: SolverConfig, cap: int = 8) -> MulticastPlan:
    """Minimum-delay cover over every subset of the candidate sets (N <= cap)."""
    require_singletons(scenario, config)
    sets = enumerate_sets(scenario, config)
    search = ExhaustiveCover(len(scenario), sets, cap=cap)
    chosen = search.run()
    return build_plan(chosen, STRATEGY_EXHAUSTIVE, config, {"states": search.states})

# =============================================================================
# HEURISTIC AND BASELINES
# =============================================================================

def solve_greedy(scenario: Scenario, config: SolverConfig) -> MulticastPlan:
    """
    Greedy local optimum heuristic.

    Walks adjacent pairs in azimuth order and lets node i+1 join the running
    set when multicasting to the pair beats two unicasts plus a realignment:
    d_{i,i+1} < d_i + d_{i+1} + d_al, with d_i = P / R_b(theta_i). Exactly
    N-1 comparisons; each emitted set is priced over its full extent.
    """
    require_singletons(scenario, config)
    n = len(scenario)
    unicast = [unicast_transmission_delay(scenario, i, config) for i in range(n)]

    bounds: List[Tuple[int, int]] = []
    start = 0
    comparisons = 0
    for i in range(n - 1):
        comparisons += 1
        pair_theta = covering_angle(scenario, i, i + 1, config.theta_min)
        if pair_theta <= config.theta_max:
            pair_delay = set_delay(scenario, i, i + 1, config)
        else:
            pair_delay = math.inf
        if not pair_delay < unicast[i] + unicast[i + 1] + config.alignment_delay:
            bounds.append((start, i))
            start = i + 1
    bounds.append((start, n - 1))

    try:
        sets = [make_set(scenario, first, last, config) for first, last in bounds]
    except InfeasibleSetError as e:
        raise InfeasibleScenarioError(f"Greedy accumulated a set wider than theta_max: {e}") from e
    return build_plan(sets, STRATEGY_GREEDY, config, {"comparisons": comparisons})


def solve_naive_broadcast(scenario: Scenario, config: SolverConfig) -> MulticastPlan:
    """One transmission widened to cover every node."""
    try:
        whole = make_set(scenario, 0, len(scenario) - 1, config)
    except InfeasibleSetError as e:
        raise InfeasibleScenarioError(f"Broadcast to all nodes is infeasible: {e}") from e
    return build_plan([whole], STRATEGY_BROADCAST, config)


def solve_multiple_unicast(scenario: Scenario, config: SolverConfig) -> MulticastPlan:
    """One narrow transmission per node, in azimuth order."""
    require_singletons(scenario, config)
    sets = [make_set(scenario, i, i, config) for i in range(len(scenario))]
    return build_plan(sets, STRATEGY_MULTI_UNICAST, config)

# =============================================================================
# REGISTRY AND METRICS
# =============================================================================

SOLVERS: Dict[str, Callable[[Scenario, SolverConfig], MulticastPlan]] = {
    STRATEGY_EXACT_BNB: solve_exact_bnb,
    STRATEGY_EXACT_DP: solve_exact_dp,
    STRATEGY_GREEDY: solve_greedy,
    STRATEGY_BROADCAST: solve_naive_broadcast,
    STRATEGY_MULTI_UNICAST: solve_multiple_unicast,
    STRATEGY_EXHAUSTIVE: solve_exhaustive,
}


def solve(strategy: str, scenario: Scenario, config: SolverConfig) -> MulticastPlan:
    """Run a solver by strategy tag."""
    try:
        solver = SOLVERS[strategy]
    except KeyError:
        raise ValueError(f"Unknown strategy '{strategy}'") from None
    return solver(scenario, config)


@timed
def timed_solve(strategy: str, scenario: Scenario, config: SolverConfig) -> MulticastPlan:
    """solve() wrapped to also return monotonic wall time: (plan, seconds)."""
    return solve(strategy, scenario, config)


def plan_metrics(plan: MulticastPlan, scenario: Scenario, config: SolverConfig) -> Tuple[float, float]:
    """
    Total delay and average throughput of a plan.

    Aggregate throughput is N*P / total delay; the average divides by N,
    leaving P / total delay.
    """
    total = plan.total_delay
    n = len(scenario)
    if total <= 0:
        return total, 0.0
    aggregate = n * config.data_size / total
    return total, aggregate / n
