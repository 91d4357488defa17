"""
candidate_sets.py

Contiguous multicast sets: the solver configuration, the set and plan
types, per-set delivery delay and enumeration of every feasible set.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Tuple

import numpy as np

from .config import DEFAULT_CONFIG
from .exceptions import InfeasibleScenarioError, InfeasibleSetError, InvalidParamsError
from .fso_link import FsoLinkParams, data_rate
from .geometry import Scenario, covering_angle, covering_angles_from


@dataclass(frozen=True)
class SolverConfig:
    """
    Pricing inputs shared by every strategy.

    data_size is in bits, alignment_delay in seconds, angles in radians.
    charge_first_alignment=False makes the first alignment of a plan free.
    """
    data_size: float
    alignment_delay: float
    link: FsoLinkParams = field(default_factory=FsoLinkParams)
    theta_min: float = DEFAULT_CONFIG["solver"]["theta_min"]
    theta_max: float = DEFAULT_CONFIG["solver"]["theta_max"]
    charge_first_alignment: bool = True

    def __post_init__(self):
        if not (self.data_size >= 0 and math.isfinite(self.data_size)):
            raise InvalidParamsError(f"data_size must be >= 0 bits, got {self.data_size}")
        if not (self.alignment_delay >= 0 and math.isfinite(self.alignment_delay)):
            raise InvalidParamsError(f"alignment_delay must be >= 0 s, got {self.alignment_delay}")
        if not self.theta_min > 0:
            raise InvalidParamsError(f"theta_min must be positive, got {self.theta_min}")
        if not self.theta_min < self.theta_max:
            raise InvalidParamsError(
                f"theta_min ({self.theta_min}) must be smaller than theta_max ({self.theta_max})"
            )


@dataclass(frozen=True)
class ContiguousSet:
    """Nodes first..last (inclusive, azimuth order) served by one transmission."""
    first: int
    last: int
    theta: float
    delay: float

    @property
    def size(self) -> int:
        return self.last - self.first + 1

    @property
    def indices(self) -> range:
        return range(self.first, self.last + 1)

    @property
    def mask(self) -> int:
        """Bitmask of covered node indices."""
        return ((1 << (self.last + 1)) - 1) ^ ((1 << self.first) - 1)


@dataclass(frozen=True)
class MulticastPlan:
    """An ordered cover of all nodes and the strategy that produced it."""
    sets: Tuple[ContiguousSet, ...]
    total_delay: float
    strategy: str
    diagnostics: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def set_count(self) -> int:
        return len(self.sets)

    def covers(self, node_count: int) -> bool:
        covered = 0
        for s in self.sets:
            covered |= s.mask
        return covered == (1 << node_count) - 1

    def is_partition(self, node_count: int) -> bool:
        return self.covers(node_count) and sum(s.size for s in self.sets) == node_count


# =============================================================================
# PRICING
# =============================================================================

def _price(scenario: Scenario, first: int, last: int, theta: float, config: SolverConfig) -> float:
    distances = scenario.distances[first:last + 1]
    rates = data_rate(config.link, theta, distances)
    transmission = np.max(config.data_size / np.asarray(rates))
    return float(transmission) + config.alignment_delay


def set_delay(scenario: Scenario, first: int, last: int, config: SolverConfig) -> float:
    """
    Delivery delay of the set first..last: the slowest member's transmission
    time at the set's covering angle, plus one alignment delay.
    """
    theta = covering_angle(scenario, first, last, config.theta_min)
    if theta > config.theta_max:
        raise InfeasibleSetError(
            f"Set [{first}..{last}] needs {math.degrees(theta):.3f} deg, "
            f"above theta_max {math.degrees(config.theta_max):.3f} deg"
        )
    return _price(scenario, first, last, theta, config)


def make_set(scenario: Scenario, first: int, last: int, config: SolverConfig) -> ContiguousSet:
    theta = covering_angle(scenario, first, last, config.theta_min)
    return ContiguousSet(first=first, last=last, theta=theta,
                         delay=set_delay(scenario, first, last, config))


def unicast_transmission_delay(scenario: Scenario, index: int, config: SolverConfig) -> float:
    """P / R_b at the node's own covering angle, without alignment."""
    theta = covering_angle(scenario, index, index, config.theta_min)
    rate = data_rate(config.link, theta, scenario.nodes[index].distance)
    return config.data_size / rate


def enumerate_sets(scenario: Scenario, config: SolverConfig) -> List[ContiguousSet]:
    """
    Every contiguous range whose covering angle fits within theta_max, priced.

    Ordered by (first, last). Without exclusions this is N(N+1)/2 sets.
    """
    candidates = []
    for first in range(len(scenario)):
        thetas = covering_angles_from(scenario, first, config.theta_min)
        for offset, theta in enumerate(thetas):
            theta = float(theta)
            # covering angles only grow with last
            if theta > config.theta_max:
                break
            last = first + offset
            candidates.append(ContiguousSet(
                first=first, last=last, theta=theta,
                delay=_price(scenario, first, last, theta, config),
            ))
    return candidates


def require_singletons(scenario: Scenario, config: SolverConfig) -> None:
    """Raise InfeasibleScenarioError when some node alone needs more than theta_max."""
    for index, node in enumerate(scenario.nodes):
        theta = covering_angle(scenario, index, index, config.theta_min)
        if theta > config.theta_max:
            raise InfeasibleScenarioError(
                f"Node {node.id} alone needs {math.degrees(theta):.3f} deg, "
                f"above theta_max {math.degrees(config.theta_max):.3f} deg"
            )


def build_plan(sets: Iterable[ContiguousSet], strategy: str, config: SolverConfig,
               diagnostics=None) -> MulticastPlan:
    """Order sets by boundary and total their delays."""
    ordered = tuple(sorted(sets, key=lambda s: (s.first, s.last)))
    total = math.fsum(s.delay for s in ordered)
    if ordered and not config.charge_first_alignment:
        total -= config.alignment_delay
    return MulticastPlan(sets=ordered, total_delay=total, strategy=strategy,
                         diagnostics=dict(diagnostics or {}))
