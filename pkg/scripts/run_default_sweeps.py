#!/usr/bin/env python3
"""
Runs the four evaluation sweeps (data size, GPS error, alignment delay and
node count) over their default ranges and writes one CSV per axis.

    python scripts/run_default_sweeps.py --profile ci --out-dir results/
"""

import argparse
import os
import sys
import time

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fso_multicast.config import (
    DEFAULT_AXIS_VALUES, GREEN, GREY, RESET, STRATEGIES, SWEEP_AXES,
    get_configured_sim_params, get_configured_significant_digits, load_config, merge_config,
)
from fso_multicast.exceptions import MulticastError
from fso_multicast.report_generators import render_sweep_csv
from fso_multicast.simulator import run_sweep


def main():
    parser = argparse.ArgumentParser(description="Run every default parameter sweep")
    parser.add_argument('--config', default=None, help='JSON config file merged over the defaults')
    parser.add_argument('--profile', default='full', choices=['full', 'ci'])
    parser.add_argument('--out-dir', default='results', help='Directory for the CSV files')
    parser.add_argument('--workers', type=int, default=1)
    parser.add_argument('--axes', default=','.join(SWEEP_AXES),
                        help='Comma-separated subset of axes to run')
    args = parser.parse_args()

    try:
        config = load_config(args.config, profile=args.profile)
        config = merge_config(config, {"simulation": {"workers": args.workers}})
        base = get_configured_sim_params(config)
        digits = get_configured_significant_digits(config)
        os.makedirs(args.out_dir, exist_ok=True)

        for axis in args.axes.split(','):
            axis = axis.strip()
            if axis not in SWEEP_AXES:
                print(f"Unknown axis '{axis}'", file=sys.stderr)
                return 2
            start = time.perf_counter()
            print(f"{GREY}Sweeping {axis} ({base.trials} trials per point)...{RESET}")
            results = run_sweep(base, axis, DEFAULT_AXIS_VALUES[axis], STRATEGIES,
                                workers=args.workers, verbose=True)
            out_path = os.path.join(args.out_dir, f"sweep_{axis}.csv")
            with open(out_path, "w", encoding="utf-8") as f:
                f.write(render_sweep_csv(results, digits))
            print(f"{GREEN}  {out_path} written in {time.perf_counter() - start:.1f} s{RESET}")
    except MulticastError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
