"""
oracle_check.py

Cross-checks the exact solvers against exhaustive cover search on seeded
small scenarios.
"""

import functools
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional

from .candidate_sets import MulticastPlan, SolverConfig
from .config import STRATEGY_EXACT_BNB, STRATEGY_EXACT_DP, STRATEGY_EXHAUSTIVE
from .geometry import Scenario
from .simulator import SimParams, generate_scenario
from .solvers import solve_exact_bnb, solve_exact_dp, solve_exhaustive

Solver = Callable[[Scenario, SolverConfig], MulticastPlan]


@dataclass
class Disagreement:
    trial_index: int
    master_seed: int
    node_count: int
    objectives: Dict[str, float]


@dataclass
class OracleReport:
    trials: int
    cap: int
    disagreements: List[Disagreement] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.disagreements


def oracle_node_count(trial_index: int, cap: int) -> int:
    """Cycle N through 2..cap; a cap below 2 pins N to the cap."""
    if cap < 2:
        return max(cap, 1)
    return 2 + trial_index % (cap - 1)


def default_oracle_solvers(cap: int) -> Dict[str, Solver]:
    return {
        STRATEGY_EXHAUSTIVE: functools.partial(solve_exhaustive, cap=cap),
        STRATEGY_EXACT_DP: solve_exact_dp,
        STRATEGY_EXACT_BNB: solve_exact_bnb,
    }


def agree(values, rel_tol: float) -> bool:
    low, high = min(values), max(values)
    return high - low <= rel_tol * max(abs(high), abs(low), 1e-300)


def run_oracle_check(params: SimParams, trials: int, cap: int = 8, rel_tol: float = 1e-9,
                     solvers: Optional[Dict[str, Solver]] = None) -> OracleReport:
    """
    Solve `trials` seeded scenarios with every solver and record each trial
    whose objectives differ by more than rel_tol (relative).
    """
    solvers = solvers or default_oracle_solvers(cap)
    config = params.solver_config()
    report = OracleReport(trials=trials, cap=cap)
    for trial_index in range(trials):
        node_count = oracle_node_count(trial_index, cap)
        scenario = generate_scenario(replace(params, node_count=node_count), trial_index)
        objectives = {name: solver(scenario, config).total_delay for name, solver in solvers.items()}
        if not agree(objectives.values(), rel_tol):
            report.disagreements.append(Disagreement(
                trial_index=trial_index,
                master_seed=params.master_seed,
                node_count=node_count,
                objectives=objectives,
            ))
    return report


def corrupted(solver: Solver, extra_delay: float = 1.0) -> Solver:
    """Wrap a solver so its objective is inflated; used to prove the harness can fail."""
    @functools.wraps(solver)
    def wrapper(scenario, config):
        plan = solver(scenario, config)
        return replace(plan, total_delay=plan.total_delay + extra_delay)
    return wrapper
