"""
cover_search.py

Exact weighted set cover over the enumerated contiguous sets.

CoverSearch is a depth-first branch and bound over the leftmost uncovered
node. ExhaustiveCover is a bitmask dynamic program over every coverage
state and serves as an independent oracle for small instances.
"""

import math
from typing import Dict, List, Optional, Sequence

from .candidate_sets import ContiguousSet
from .config import MAX_BRUTE_FORCE_CAP
from .exceptions import InfeasibleScenarioError, InvalidParamsError


def _lowest_unset_bit(mask: int) -> int:
    return ((mask + 1) & ~mask).bit_length() - 1


class CoverSearch:
    """
    Branch and bound for the minimum-delay cover.

    Branches on every feasible set containing the leftmost uncovered node
    (overlaps with already covered nodes are allowed). A node is pruned when
    its cost plus a lower bound on covering the rest cannot beat the
    incumbent. The bound charges each uncovered node the cheapest
    per-member share delay/|S| over the sets containing it, which never
    exceeds the true cost of covering those nodes.
    """

    def __init__(self, node_count: int, sets: Sequence[ContiguousSet],
                 incumbent: Optional[Sequence[ContiguousSet]] = None):
        self.node_count = node_count
        self.sets = list(sets)
        self.full_mask = (1 << node_count) - 1

        self.containing: List[List[ContiguousSet]] = [[] for _ in range(node_count)]
        for s in self.sets:
            for index in s.indices:
                self.containing[index].append(s)
        for bucket in self.containing:
            bucket.sort(key=lambda s: (s.delay, s.first, s.last))

        self.share = [
            min((s.delay / s.size for s in bucket), default=math.inf)
            for bucket in self.containing
        ]

        self.best_cost = math.inf
        self.best_sets: Optional[List[ContiguousSet]] = None
        if incumbent is not None:
            self.best_cost = math.fsum(s.delay for s in incumbent)
            self.best_sets = list(incumbent)

        self.nodes_explored = 0
        self.incumbent_updates = 0

    def run(self) -> List[ContiguousSet]:
        """Return the sets of a minimum-delay cover."""
        if any(not bucket for bucket in self.containing):
            uncovered = [i for i, bucket in enumerate(self.containing) if not bucket]
            raise InfeasibleScenarioError(f"No feasible set contains node index {uncovered[0]}")
        if self.node_count == 0:
            return []
        self._branch(0, 0.0, sum(self.share), [])
        return list(self.best_sets)

    def _branch(self, covered: int, cost: float, remaining_bound: float,
                chosen: List[ContiguousSet]) -> None:
        self.nodes_explored += 1
        if covered == self.full_mask:
            if cost < self.best_cost:
                self.best_cost = cost
                self.best_sets = list(chosen)
                self.incumbent_updates += 1
            return
        if cost + remaining_bound >= self.best_cost:
            return

        index = _lowest_unset_bit(covered)
        for s in self.containing[index]:
            new_cost = cost + s.delay
            if new_cost >= self.best_cost:
                # buckets are sorted by delay, later sets cost at least as much
                break
            newly = s.mask & ~covered
            bound = remaining_bound
            while newly:
                bit = newly & -newly
                bound -= self.share[bit.bit_length() - 1]
                newly ^= bit
            chosen.append(s)
            self._branch(covered | s.mask, new_cost, max(bound, 0.0), chosen)
            chosen.pop()


class ExhaustiveCover:
    """
    Minimum-weight set cover by dynamic programming over all 2^N coverage
    masks. Treats the sets as an arbitrary collection, so every cover of the
    universe is considered.
    """

    def __init__(self, node_count: int, sets: Sequence[ContiguousSet], cap: int = MAX_BRUTE_FORCE_CAP):
        if not 1 <= cap <= MAX_BRUTE_FORCE_CAP:
            raise InvalidParamsError(f"Exhaustive cover cap must lie in 1..{MAX_BRUTE_FORCE_CAP}, got {cap}")
        if node_count > cap:
            raise InvalidParamsError(
                f"Exhaustive cover search is capped at {cap} nodes, got {node_count}"
            )
        self.node_count = node_count
        self.sets = list(sets)
        self.states = 0

    def run(self) -> List[ContiguousSet]:
        size = 1 << self.node_count
        full = size - 1
        cost = [math.inf] * size
        parent: Dict[int, tuple] = {}
        cost[0] = 0.0
        # OR-ing a set never lowers the mask, so ascending order is topological
        for mask in range(size):
            if cost[mask] == math.inf:
                continue
            self.states += 1
            for k, s in enumerate(self.sets):
                target = mask | s.mask
                if target == mask:
                    continue
                candidate = cost[mask] + s.delay
                if candidate < cost[target]:
                    cost[target] = candidate
                    parent[target] = (mask, k)

        if cost[full] == math.inf:
            raise InfeasibleScenarioError("The candidate sets do not cover every node")

        chosen = []
        mask = full
        while mask:
            mask, k = parent[mask]
            chosen.append(self.sets[k])
        return chosen
