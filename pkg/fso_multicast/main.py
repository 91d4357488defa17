"""
Main application entry point and CLI handling.
"""

import argparse
import functools
import os
import sys

from .candidate_sets import SolverConfig
from .decorators import timed
from .config import (
    COMMANDS, DEFAULT_AXIS_VALUES, GREEN, GREY, RED, RESET, STRATEGIES, STRATEGY_EXACT_DP,
    STRATEGY_EXHAUSTIVE, SWEEP_AXES, get_configured_link_params,
    get_configured_oracle_cap, get_configured_sim_params, get_configured_significant_digits,
    get_configured_solver_settings, load_config, merge_config,
)
from .exceptions import (
    ConfigError, DegeneratePositionError, GpsErrorTooLargeError, InfeasibleScenarioError,
    InfeasibleSetError, InvalidParamsError, ScenarioFileError, SectorViolationError,
)
from .oracle_check import corrupted, default_oracle_solvers, run_oracle_check
from .report_generators import (
    comparison_json, format_comparison, format_plan_summary, generate_html_report,
    render_plans_csv, render_sweep_csv,
)
from .simulator import generate_scenario, run_sweep
from .solvers import plan_metrics, solve_exhaustive, timed_solve
from .utils import gb_to_bits, load_scenario_file, save_scenario_file

EXIT_OK = 0
EXIT_ORACLE_MISMATCH = 1
EXIT_CONFIG_ERROR = 2
EXIT_INFEASIBLE = 3

CONFIG_ERRORS = (
    ConfigError, ScenarioFileError, DegeneratePositionError, GpsErrorTooLargeError,
    SectorViolationError, InvalidParamsError,
)
INFEASIBLE_ERRORS = (InfeasibleScenarioError, InfeasibleSetError)

# =============================================================================
# ARGUMENT PARSING
# =============================================================================

def build_parser():
    parser = argparse.ArgumentParser(
        description="FSO Multicast Planner - minimum-delay multicast with adjustable beam divergence",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python multicast_main.py --command solve --scenario fixtures/pair.json
  python multicast_main.py --command compare --nodes 15 --seed 7 --html-report report.html
  python multicast_main.py --command sweep --axis gps_error --trials 500 --out gps.csv
  python multicast_main.py --command sweep --axis data_size --values 20GB,100GB,180GB
  python multicast_main.py --command oracle-check --trials 200"""
    )
    parser.add_argument('--command', required=True, choices=COMMANDS,
                        help='What to run')
    parser.add_argument('--config', default=None,
                        help='JSON config file merged over the defaults')
    parser.add_argument('--profile', default='full', choices=['full', 'ci'],
                        help='Trial-count profile (ci uses 500 trials, same seeds)')
    parser.add_argument('--scenario', default=None,
                        help='Scenario file (JSON); otherwise a scenario is generated')
    parser.add_argument('--seed', type=int, default=None,
                        help='Master seed for scenario generation')
    parser.add_argument('--trials', type=int, default=None,
                        help='Trials per sweep point or oracle check')
    parser.add_argument('--axis', choices=SWEEP_AXES, default=None,
                        help='Parameter swept by the sweep command')
    parser.add_argument('--values', default=None,
                        help='Comma-separated axis values (data_size accepts a GB suffix)')
    parser.add_argument('--strategies', default='all',
                        help=f"Comma-separated strategies or 'all' ({', '.join(STRATEGIES)}, {STRATEGY_EXHAUSTIVE})")
    parser.add_argument('--out', default=None,
                        help='Output CSV path (standard output when omitted for sweeps)')
    parser.add_argument('--nodes', type=int, default=None, help='Override node count N')
    parser.add_argument('--gps-error', type=float, default=None, help='Override GPS error (m)')
    parser.add_argument('--data-size-gb', type=float, default=None, help='Override data size P (GB)')
    parser.add_argument('--alignment-delay', type=float, default=None, help='Override d_al (s)')
    parser.add_argument('--workers', type=int, default=None,
                        help='Worker processes for trials')
    parser.add_argument('--cap', type=int, default=None,
                        help='Largest N for the exhaustive oracle (1-16)')
    parser.add_argument('--save-scenario', default=None,
                        help='Write the solved scenario to this file')
    parser.add_argument('--markdown', action='store_true',
                        help='Output summaries in Markdown format')
    parser.add_argument('--json', action='store_true',
                        help='Output summaries in JSON format')
    parser.add_argument('--html-report', default=None,
                        help='Write an HTML comparison report to this path')
    parser.add_argument('--quiet', action='store_true',
                        help='Suppress progress messages')
    parser.add_argument('--corrupt-cost', action='store_true', help=argparse.SUPPRESS)
    return parser


def parse_strategies(text, allow_exhaustive=True):
    if text in (None, "", "all"):
        return list(STRATEGIES)
    known = set(STRATEGIES) | ({STRATEGY_EXHAUSTIVE} if allow_exhaustive else set())
    chosen = []
    for token in text.split(","):
        token = token.strip()
        if token not in known:
            raise ConfigError(f"Unknown strategy '{token}' (expected one of {', '.join(sorted(known))})")
        if token not in chosen:
            chosen.append(token)
    return chosen


def parse_axis_values(axis, text):
    if text is None:
        return list(DEFAULT_AXIS_VALUES[axis])
    values = []
    for token in text.split(","):
        token = token.strip()
        scale_gb = axis == "data_size" and token.upper().endswith("GB")
        if scale_gb:
            token = token[:-2]
        try:
            value = float(token)
        except ValueError:
            raise ConfigError(f"Bad value '{token}' for axis {axis}") from None
        values.append(gb_to_bits(value) if scale_gb else value)
    if not values:
        raise ConfigError("--values is empty")
    return values


def apply_cli_overrides(config, args):
    """Fold command-line overrides into the merged configuration."""
    simulation = {}
    if args.seed is not None:
        simulation["master_seed"] = args.seed
    if args.trials is not None and args.command == "sweep":
        simulation["trials"] = args.trials
    if args.nodes is not None:
        simulation["node_count"] = args.nodes
    if args.gps_error is not None:
        simulation["gps_error"] = args.gps_error
    if args.data_size_gb is not None:
        simulation["data_size"] = gb_to_bits(args.data_size_gb)
    if args.alignment_delay is not None:
        simulation["alignment_delay"] = args.alignment_delay
    if args.workers is not None:
        simulation["workers"] = args.workers
    overrides = {"simulation": simulation} if simulation else {}
    if args.cap is not None:
        overrides["oracle"] = {"brute_force_cap": args.cap}
    return merge_config(config, overrides)


def progress(args, message):
    if not args.quiet:
        print(f"{GREY}{message}{RESET}", file=sys.stderr)

# =============================================================================
# SCENARIO RESOLUTION
# =============================================================================

def resolve_scenario(args, config):
    """
    Load the scenario file or generate trial 0 of the configured seed.

    Returns (scenario, solver_config). File-level link and pricing fields
    override the configuration.
    """
    if args.scenario:
        progress(args, f"Loading scenario {args.scenario}...")
        scenario_file = load_scenario_file(args.scenario)
        simulation = {}
        if scenario_file.data_size is not None:
            simulation["data_size"] = scenario_file.data_size
        if scenario_file.alignment_delay is not None:
            simulation["alignment_delay"] = scenario_file.alignment_delay
        config = merge_config(config, {"link": scenario_file.link, "simulation": simulation})
        scenario = scenario_file.to_scenario()
        sim = config["simulation"]
        solver = get_configured_solver_settings(config)
        solver_config = SolverConfig(
            data_size=float(sim["data_size"]),
            alignment_delay=float(sim["alignment_delay"]),
            link=get_configured_link_params(config),
            theta_min=float(solver["theta_min"]),
            theta_max=float(solver["theta_max"]),
            charge_first_alignment=bool(solver["charge_first_alignment"]),
        )
        return scenario, solver_config

    params = get_configured_sim_params(config)
    progress(args, f"Generating scenario: N={params.node_count}, seed={params.master_seed}...")
    return generate_scenario(params, 0), params.solver_config()


def solve_all(args, config, scenario, solver_config, strategies):
    """Run each strategy once; returns [(plan, average throughput, seconds)]."""
    cap = get_configured_oracle_cap(config)
    entries = []
    for strategy in strategies:
        if strategy == STRATEGY_EXHAUSTIVE:
            plan, elapsed = _timed_exhaustive(scenario, solver_config, cap)
        else:
            plan, elapsed = timed_solve(strategy, scenario, solver_config)
        _, throughput = plan_metrics(plan, scenario, solver_config)
        entries.append((plan, throughput, elapsed))
    return entries


def _timed_exhaustive(scenario, solver_config, cap):
    return timed(functools.partial(solve_exhaustive, cap=cap))(scenario, solver_config)

# =============================================================================
# COMMANDS
# =============================================================================

def cmd_solve(args, config):
    scenario, solver_config = resolve_scenario(args, config)
    strategies = parse_strategies(args.strategies)
    entries = solve_all(args, config, scenario, solver_config, strategies)
    digits = get_configured_significant_digits(config)

    if args.save_scenario:
        save_scenario_file(args.save_scenario, scenario)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(render_plans_csv(entries, scenario, digits))
        progress(args, f"Plans written to {args.out}")

    if args.json:
        print(comparison_json(entries, scenario))
    else:
        for plan, throughput, elapsed in entries:
            summary = format_plan_summary(plan, scenario, solver_config, throughput, elapsed,
                                          markdown=args.markdown)
            print(summary)
    return EXIT_OK


def cmd_compare(args, config):
    scenario, solver_config = resolve_scenario(args, config)
    strategies = parse_strategies(args.strategies)
    entries = solve_all(args, config, scenario, solver_config, strategies)

    if args.save_scenario:
        save_scenario_file(args.save_scenario, scenario)
    if args.json:
        print(comparison_json(entries, scenario))
    else:
        print(format_comparison(entries, markdown=args.markdown))
    if args.html_report:
        generate_html_report(args.html_report, entries, scenario, solver_config)
    return EXIT_OK


def cmd_sweep(args, config):
    if args.axis is None:
        raise ConfigError("The sweep command needs --axis")
    strategies = parse_strategies(args.strategies, allow_exhaustive=False)
    values = parse_axis_values(args.axis, args.values)
    base = get_configured_sim_params(config)
    workers = int(config["simulation"].get("workers", 1))

    progress(args, f"Sweeping {args.axis} over {len(values)} values, "
                   f"{base.trials} trials each, seed {base.master_seed}...")
    results = run_sweep(base, args.axis, values, strategies, workers=workers,
                        verbose=not args.quiet)
    text = render_sweep_csv(results, get_configured_significant_digits(config))

    if args.out:
        out_dir = os.path.dirname(os.path.abspath(args.out))
        os.makedirs(out_dir, exist_ok=True)
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
        if not args.quiet:
            print(f"{GREEN}Sweep written to {args.out}{RESET}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle_check(args, config):
    cap = get_configured_oracle_cap(config)
    trials = args.trials if args.trials is not None else int(config["oracle"]["trials"])
    if trials < 1:
        raise ConfigError(f"--trials must be >= 1, got {trials}")
    rel_tol = float(config["oracle"]["rel_tol"])
    params = get_configured_sim_params(config)

    solvers = default_oracle_solvers(cap)
    if args.corrupt_cost:
        solvers[STRATEGY_EXACT_DP] = corrupted(solvers[STRATEGY_EXACT_DP])

    progress(args, f"Oracle check: {trials} scenarios, N up to {cap}, seed {params.master_seed}...")
    report = run_oracle_check(params, trials, cap=cap, rel_tol=rel_tol, solvers=solvers)
    if report.passed:
        print(f"{GREEN}✔ All {trials} scenarios agree within {rel_tol:g} relative.{RESET}")
        return EXIT_OK

    print(f"{RED}✖ {len(report.disagreements)} of {trials} scenarios disagree:{RESET}")
    for d in report.disagreements[:10]:
        values = ", ".join(f"{name}={value:.12g}" for name, value in d.objectives.items())
        print(f"  seed={d.master_seed} trial={d.trial_index} N={d.node_count}: {values}")
    if len(report.disagreements) > 10:
        print(f"  ... and {len(report.disagreements) - 10} more")
    return EXIT_ORACLE_MISMATCH


COMMAND_HANDLERS = {
    "solve": cmd_solve,
    "sweep": cmd_sweep,
    "compare": cmd_compare,
    "oracle-check": cmd_oracle_check,
}

# =============================================================================
# MAIN ENTRY POINT
# =============================================================================

def main(argv=None):
    """Main entry point; returns the process exit status."""
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config, profile=args.profile)
        config = apply_cli_overrides(config, args)
        return COMMAND_HANDLERS[args.command](args, config)
    except CONFIG_ERRORS as e:
        print(f"{RED}✖ Error: {e}{RESET}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except INFEASIBLE_ERRORS as e:
        print(f"{RED}✖ Infeasible scenario: {e}{RESET}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OSError as e:
        print(f"{RED}✖ I/O error: {e}{RESET}", file=sys.stderr)
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
