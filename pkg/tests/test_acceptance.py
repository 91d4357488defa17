#!/usr/bin/env python3
"""
Test Acceptance

Long-running statistical checks on the evaluation claims: dominance of the
exact plan, ordering of the strategies, trend shapes along every sweep
axis, heuristic efficiency and solver complexity.

Skipped unless FSO_MULTICAST_ACCEPTANCE=1 is set.
"""

import os
import sys
import unittest
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from fso_multicast.candidate_sets import enumerate_sets
from fso_multicast.config import (
    DEFAULT_AXIS_VALUES, STRATEGIES, STRATEGY_BROADCAST, STRATEGY_EXACT_BNB, STRATEGY_EXACT_DP,
    STRATEGY_GREEDY, STRATEGY_MULTI_UNICAST,
)
from fso_multicast.oracle_check import run_oracle_check
from fso_multicast.simulator import SimParams, aggregate, generate_scenario, run_sweep, run_trials
from fso_multicast.solvers import solve_greedy

RUN_ACCEPTANCE = os.environ.get("FSO_MULTICAST_ACCEPTANCE") == "1"
WORKERS = max(1, min(4, os.cpu_count() or 1))


def inversions(values, increasing=True):
    """Adjacent pairs that break the expected direction."""
    pairs = zip(values, values[1:])
    if increasing:
        return sum(1 for a, b in pairs if b < a)
    return sum(1 for a, b in pairs if b > a)


@unittest.skipUnless(RUN_ACCEPTANCE, "set FSO_MULTICAST_ACCEPTANCE=1 to run acceptance checks")
class TestOracleAcceptance(unittest.TestCase):

    def test_two_hundred_scenarios_agree(self):
        report = run_oracle_check(SimParams(), trials=200, cap=8, rel_tol=1e-9)
        self.assertTrue(report.passed, report.disagreements[:3])


@unittest.skipUnless(RUN_ACCEPTANCE, "set FSO_MULTICAST_ACCEPTANCE=1 to run acceptance checks")
class TestDefaultScenarioAcceptance(unittest.TestCase):
    """1000 trials at the default setting."""

    @classmethod
    def setUpClass(cls):
        cls.params = SimParams(trials=1000)
        cls.results = run_trials(cls.params, STRATEGIES, workers=WORKERS)
        cls.means = aggregate(cls.results, STRATEGIES)

    def test_exact_dominates_every_trial(self):
        violations = 0
        for result in self.results:
            exact = result.metrics[STRATEGY_EXACT_BNB].total_delay
            for strategy in (STRATEGY_GREEDY, STRATEGY_MULTI_UNICAST, STRATEGY_BROADCAST):
                if exact > result.metrics[strategy].total_delay * (1 + 1e-9):
                    violations += 1
        self.assertEqual(violations, 0)

    def test_mean_delay_ordering(self):
        exact = self.means[STRATEGY_EXACT_BNB].mean_delay
        greedy = self.means[STRATEGY_GREEDY].mean_delay
        unicast = self.means[STRATEGY_MULTI_UNICAST].mean_delay
        broadcast = self.means[STRATEGY_BROADCAST].mean_delay
        self.assertLessEqual(exact, greedy)
        self.assertLessEqual(greedy, unicast)
        self.assertLessEqual(unicast, broadcast)
        self.assertGreaterEqual(broadcast, 5 * exact)

    def test_exact_solvers_agree(self):
        for result in self.results:
            bnb = result.metrics[STRATEGY_EXACT_BNB].total_delay
            dp = result.metrics[STRATEGY_EXACT_DP].total_delay
            self.assertLessEqual(abs(bnb - dp), 1e-9 * max(bnb, dp))


@unittest.skipUnless(RUN_ACCEPTANCE, "set FSO_MULTICAST_ACCEPTANCE=1 to run acceptance checks")
class TestTrendAcceptance(unittest.TestCase):
    """Mean delay and throughput move in the expected direction along each axis."""

    STRATEGIES = (STRATEGY_EXACT_DP, STRATEGY_GREEDY, STRATEGY_MULTI_UNICAST, STRATEGY_BROADCAST)
    THROUGHPUT_FALLS = {"gps_error", "alignment_delay", "node_count"}

    def _check_axis(self, axis):
        results = run_sweep(SimParams(trials=500), axis, DEFAULT_AXIS_VALUES[axis], self.STRATEGIES,
                            workers=WORKERS)
        for strategy in self.STRATEGIES:
            delays = [r.means[strategy].mean_delay for r in results]
            throughputs = [r.means[strategy].mean_average_throughput for r in results]
            self.assertLessEqual(inversions(delays, increasing=True), 1, f"{axis} {strategy} delay")
            increasing = axis not in self.THROUGHPUT_FALLS
            self.assertLessEqual(inversions(throughputs, increasing=increasing), 1,
                                 f"{axis} {strategy} throughput")

    def test_data_size(self):
        self._check_axis("data_size")

    def test_gps_error(self):
        self._check_axis("gps_error")

    def test_alignment_delay(self):
        self._check_axis("alignment_delay")

    def test_node_count(self):
        self._check_axis("node_count")


@unittest.skipUnless(RUN_ACCEPTANCE, "set FSO_MULTICAST_ACCEPTANCE=1 to run acceptance checks")
class TestEfficiencyAcceptance(unittest.TestCase):
    """Timing ratios are measured serially in one process."""

    def test_heuristic_time_and_throughput(self):
        strategies = [STRATEGY_EXACT_BNB, STRATEGY_GREEDY, STRATEGY_MULTI_UNICAST]
        params = SimParams(node_count=25, trials=200)
        means = aggregate(run_trials(params, strategies), strategies)
        exact, greedy = means[STRATEGY_EXACT_BNB], means[STRATEGY_GREEDY]
        unicast = means[STRATEGY_MULTI_UNICAST]
        self.assertLessEqual(greedy.mean_solver_time, 0.10 * exact.mean_solver_time)
        # d_al sits on both sides of the merge test, so greedy merges only
        # when one wide transmission beats two narrow ones; it lands near
        # multiple unicast (about 65% of exact throughput at N=25)
        self.assertLessEqual(greedy.mean_average_throughput, exact.mean_average_throughput)
        self.assertGreaterEqual(greedy.mean_average_throughput, 0.50 * exact.mean_average_throughput)
        self.assertLessEqual(greedy.mean_delay, unicast.mean_delay * (1 + 1e-9))

    def test_bnb_time_grows_with_node_count(self):
        small = aggregate(run_trials(SimParams(node_count=10, trials=200), [STRATEGY_EXACT_BNB]),
                          [STRATEGY_EXACT_BNB])
        large = aggregate(run_trials(SimParams(node_count=25, trials=200), [STRATEGY_EXACT_BNB]),
                          [STRATEGY_EXACT_BNB])
        self.assertGreater(large[STRATEGY_EXACT_BNB].mean_solver_time,
                           small[STRATEGY_EXACT_BNB].mean_solver_time)

    def test_complexity_signatures(self):
        for n in range(1, 26):
            params = SimParams(node_count=n, trials=1)
            scenario = generate_scenario(params, 0)
            config = params.solver_config()
            self.assertEqual(solve_greedy(scenario, config).diagnostics["comparisons"], n - 1)
            self.assertEqual(len(enumerate_sets(scenario, config)), n * (n + 1) // 2)


if __name__ == '__main__':
    unittest.main()
