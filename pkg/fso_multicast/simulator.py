"""
simulator.py

Seeded Monte-Carlo evaluation: random scenarios in an annular sector around
the transmitter, every requested strategy per trial, and means across
trials and parameter sweeps.
"""

import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np

from .candidate_sets import SolverConfig
from .config import (
    DEFAULT_CONFIG, GREY, RESET, STRATEGIES, SWEEP_AXES,
    get_configured_link_params, get_configured_solver_settings,
)
from .exceptions import InvalidParamsError
from .fso_link import FsoLinkParams
from .geometry import NodePosition, Scenario, to_polar_sorted
from .solvers import plan_metrics, timed_solve


@dataclass(frozen=True)
class SimParams:
    """Scenario generator, pricing and trial settings for one experiment point."""
    node_count: int = DEFAULT_CONFIG["simulation"]["node_count"]
    rf_range: float = DEFAULT_CONFIG["simulation"]["rf_range"]
    sector: float = DEFAULT_CONFIG["simulation"]["sector"]
    gps_error: float = DEFAULT_CONFIG["simulation"]["gps_error"]
    data_size: float = DEFAULT_CONFIG["simulation"]["data_size"]
    alignment_delay: float = DEFAULT_CONFIG["simulation"]["alignment_delay"]
    link: FsoLinkParams = field(default_factory=FsoLinkParams)
    min_node_distance: float = DEFAULT_CONFIG["simulation"]["min_node_distance"]
    trials: int = DEFAULT_CONFIG["simulation"]["trials"]
    master_seed: int = DEFAULT_CONFIG["simulation"]["master_seed"]
    theta_min: float = DEFAULT_CONFIG["solver"]["theta_min"]
    theta_max: float = DEFAULT_CONFIG["solver"]["theta_max"]
    charge_first_alignment: bool = DEFAULT_CONFIG["solver"]["charge_first_alignment"]
    # GPS error that sizes the placement window; None uses gps_error
    placement_gps_error: Optional[float] = None

    def __post_init__(self):
        if int(self.node_count) != self.node_count or self.node_count < 1:
            raise InvalidParamsError(f"node_count must be an integer >= 1, got {self.node_count}")
        if int(self.trials) != self.trials or self.trials < 1:
            raise InvalidParamsError(f"trials must be an integer >= 1, got {self.trials}")
        if not (0 <= self.master_seed < 2 ** 64):
            raise InvalidParamsError(f"master_seed must fit in 64 unsigned bits, got {self.master_seed}")
        if self.gps_error < 0:
            raise InvalidParamsError(f"gps_error must be >= 0, got {self.gps_error}")
        if not self.gps_error < self.min_node_distance:
            raise InvalidParamsError(
                f"gps_error ({self.gps_error} m) must be smaller than "
                f"min_node_distance ({self.min_node_distance} m)"
            )
        if not self.min_node_distance < self.rf_range:
            raise InvalidParamsError(
                f"min_node_distance ({self.min_node_distance} m) must be smaller than "
                f"rf_range ({self.rf_range} m)"
            )
        if not (0 < self.sector <= 2 * math.pi):
            raise InvalidParamsError(f"sector must lie in (0, 2*pi], got {self.sector}")
        if self.placement_gps_error is not None and not (0 <= self.placement_gps_error < self.min_node_distance):
            raise InvalidParamsError(
                f"placement_gps_error must lie in [0, min_node_distance), got {self.placement_gps_error}"
            )
        if 2 * self.placement_half_angle > self.sector:
            raise InvalidParamsError(
                f"A node at {self.min_node_distance} m with {self.gps_error} m GPS error "
                f"does not fit in a {math.degrees(self.sector):.1f} deg sector"
            )
        if 2 * self.max_half_angle > self.theta_max:
            raise InvalidParamsError("The closest possible node would need more than theta_max")
        # validates data_size, alignment_delay and the angle bounds
        self.solver_config()

    @property
    def max_half_angle(self) -> float:
        """Uncertainty half-angle of a node at min_node_distance."""
        return math.asin(self.gps_error / self.min_node_distance)

    @property
    def placement_half_angle(self) -> float:
        """Margin kept between the sector edges and the drawn azimuths."""
        placement = self.gps_error
        if self.placement_gps_error is not None:
            placement = max(placement, self.placement_gps_error)
        return math.asin(placement / self.min_node_distance)

    def solver_config(self) -> SolverConfig:
        return SolverConfig(
            data_size=self.data_size,
            alignment_delay=self.alignment_delay,
            link=self.link,
            theta_min=self.theta_min,
            theta_max=self.theta_max,
            charge_first_alignment=self.charge_first_alignment,
        )

    def with_axis(self, axis: str, value) -> "SimParams":
        """Copy with one sweep axis substituted."""
        if axis not in SWEEP_AXES:
            raise InvalidParamsError(f"Unknown sweep axis '{axis}' (expected one of {', '.join(SWEEP_AXES)})")
        if axis == "node_count":
            if float(value) != int(value):
                raise InvalidParamsError(f"node_count must be an integer, got {value}")
            value = int(value)
        else:
            value = float(value)
        return replace(self, **{axis: value})

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "SimParams":
        sim = {**DEFAULT_CONFIG["simulation"], **config.get("simulation", {})}
        solver = get_configured_solver_settings(config)
        return cls(
            node_count=int(sim["node_count"]),
            rf_range=float(sim["rf_range"]),
            sector=float(sim["sector"]),
            gps_error=float(sim["gps_error"]),
            data_size=float(sim["data_size"]),
            alignment_delay=float(sim["alignment_delay"]),
            link=get_configured_link_params(config),
            min_node_distance=float(sim["min_node_distance"]),
            trials=int(sim["trials"]),
            master_seed=int(sim["master_seed"]),
            theta_min=float(solver["theta_min"]),
            theta_max=float(solver["theta_max"]),
            charge_first_alignment=bool(solver["charge_first_alignment"]),
        )


@dataclass(frozen=True)
class StrategyMetrics:
    total_delay: float
    average_throughput: float
    solver_time: float
    set_count: int


@dataclass(frozen=True)
class TrialResult:
    trial_index: int
    metrics: Dict[str, StrategyMetrics]


@dataclass(frozen=True)
class StrategyMeans:
    mean_delay: float
    mean_average_throughput: float
    mean_solver_time: float


@dataclass(frozen=True)
class SweepResult:
    axis_name: str
    axis_value: float
    trials: int
    means: Dict[str, StrategyMeans]

# =============================================================================
# SCENARIO GENERATION
# =============================================================================

def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    """
    Independent generator for one trial.

    The stream depends only on (master_seed, trial_index) through a
    SeedSequence spawn key, so serial and parallel runs draw the same nodes.
    """
    return np.random.default_rng(np.random.SeedSequence(entropy=master_seed, spawn_key=(trial_index,)))


def generate_scenario(params: SimParams, trial_index: int) -> Scenario:
    """
    Draw node_count receivers uniformly over the annular sector
    min_node_distance <= L <= rf_range, beta_max <= phi <= sector - beta_max,
    with beta_max the uncertainty half-angle of placement_gps_error (or
    gps_error) at min_node_distance.

    Draws are taken node by node, so a larger node_count extends the same
    trial's smaller scenario.
    """
    rng = trial_rng(params.master_seed, trial_index)
    draws = rng.random((params.node_count, 2))

    inner_sq = params.min_node_distance ** 2
    outer_sq = params.rf_range ** 2
    distance = np.sqrt(draws[:, 0] * (outer_sq - inner_sq) + inner_sq)
    beta_max = params.placement_half_angle
    phi = beta_max + draws[:, 1] * (params.sector - 2 * beta_max)

    positions = [
        NodePosition(id=i, x=float(d * np.cos(p)), y=float(d * np.sin(p)))
        for i, (d, p) in enumerate(zip(distance, phi))
    ]
    return to_polar_sorted(positions, params.gps_error, params.sector)

# =============================================================================
# TRIALS AND SWEEPS
# =============================================================================

def _ordered(strategies: Iterable[str]) -> List[str]:
    strategies = set(strategies)
    known = [s for s in STRATEGIES if s in strategies]
    return known + sorted(strategies - set(known))


def run_trial(params: SimParams, trial_index: int, strategies: Iterable[str]) -> TrialResult:
    """
    Solve one generated scenario with each strategy, sequentially.

    Solver time covers the solver call only, including any set enumeration
    it performs; generation and metric computation are excluded.
    """
    scenario = generate_scenario(params, trial_index)
    config = params.solver_config()
    metrics = {}
    for strategy in _ordered(strategies):
        plan, elapsed = timed_solve(strategy, scenario, config)
        total, throughput = plan_metrics(plan, scenario, config)
        metrics[strategy] = StrategyMetrics(
            total_delay=total,
            average_throughput=throughput,
            solver_time=elapsed,
            set_count=plan.set_count,
        )
    return TrialResult(trial_index=trial_index, metrics=metrics)


def _run_trial_task(task):
    params, trial_index, strategies = task
    return run_trial(params, trial_index, strategies)


def run_trials(params: SimParams, strategies: Iterable[str], workers: int = 1) -> List[TrialResult]:
    """Run params.trials trials, in a process pool when workers > 1, ordered by index."""
    strategies = _ordered(strategies)
    tasks = [(params, index, strategies) for index in range(params.trials)]
    if workers <= 1:
        results = [_run_trial_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_trial_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    return sorted(results, key=lambda r: r.trial_index)


def aggregate(trials: Sequence[TrialResult], strategies: Iterable[str]) -> Dict[str, StrategyMeans]:
    """Per-strategy means over trials, accumulated in trial-index order."""
    ordered = sorted(trials, key=lambda r: r.trial_index)
    means = {}
    for strategy in _ordered(strategies):
        rows = [t.metrics[strategy] for t in ordered]
        means[strategy] = StrategyMeans(
            mean_delay=float(np.mean([m.total_delay for m in rows])),
            mean_average_throughput=float(np.mean([m.average_throughput for m in rows])),
            mean_solver_time=float(np.mean([m.solver_time for m in rows])),
        )
    return means


def run_sweep(base: SimParams, axis: str, values: Sequence, strategies: Iterable[str],
              workers: int = 1, verbose: bool = False) -> List[SweepResult]:
    """
    Run base.trials trials at every axis value and average per strategy.

    Trial seeds are shared across axis values. Along gps_error the placement
    window is sized for the largest swept error, so every point draws the
    same receivers and only their uncertainty changes.
    """
    if not values:
        raise InvalidParamsError("A sweep needs at least one axis value")
    strategies = _ordered(strategies)
    points = [base.with_axis(axis, value) for value in values]
    if axis == "gps_error":
        widest = max(p.gps_error for p in points)
        points = [replace(p, placement_gps_error=widest) for p in points]

    results = []
    for value, params in zip(values, points):
        if verbose:
            print(f"{GREY}  {axis}={value:g}: {params.trials} trials...{RESET}", file=sys.stderr)
        trials = run_trials(params, strategies, workers=workers)
        results.append(SweepResult(
            axis_name=axis,
            axis_value=getattr(params, axis),
            trials=len(trials),
            means=aggregate(trials, strategies),
        ))
    return results
