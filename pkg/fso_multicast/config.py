"""
Configuration constants and settings for the FSO multicast planner.
"""

import copy
import json
import math
import os

from .exceptions import ConfigError

# =============================================================================
# CONSTANTS AND CONFIGURATION
# =============================================================================

# ANSI escape sequences for colored output
RESET = "\033[0m"
GREY = "\033[90m"
BLUE = "\033[94m"
GREEN = "\033[92m"
YELLOW = "\033[93m"
RED = "\033[91m"
BOLD = "\033[1m"

# Physical constants
PLANCK_CONSTANT = 6.62607015e-34  # J*s
SPEED_OF_LIGHT = 2.99792458e8  # m/s

# Units
BITS_PER_GB = 8e9

# Exhaustive search keeps one cost per coverage bitmask (2^N entries)
MAX_BRUTE_FORCE_CAP = 16

# Strategy tags
STRATEGY_EXACT_BNB = "exact-bnb"
STRATEGY_EXACT_DP = "exact-dp"
STRATEGY_GREEDY = "greedy"
STRATEGY_BROADCAST = "broadcast"
STRATEGY_MULTI_UNICAST = "multi-unicast"
STRATEGY_EXHAUSTIVE = "exhaustive"

STRATEGIES = (
    STRATEGY_EXACT_BNB,
    STRATEGY_EXACT_DP,
    STRATEGY_GREEDY,
    STRATEGY_BROADCAST,
    STRATEGY_MULTI_UNICAST,
)

# Display labels used in summaries
STRATEGY_LABELS = {
    STRATEGY_EXACT_BNB: "Set Cover (B&B)",
    STRATEGY_EXACT_DP: "Set Cover (DP)",
    STRATEGY_GREEDY: "Heuristic",
    STRATEGY_BROADCAST: "FSO BCast",
    STRATEGY_MULTI_UNICAST: "FSO MU",
    STRATEGY_EXHAUSTIVE: "Exhaustive",
}

# Sweep axes and the evaluation ranges they default to
SWEEP_AXES = ("data_size", "gps_error", "alignment_delay", "node_count")

DEFAULT_AXIS_VALUES = {
    "data_size": [gb * BITS_PER_GB for gb in (20, 60, 100, 140, 180)],
    "gps_error": [1.0, 2.0, 3.0, 4.0, 5.0],
    "alignment_delay": [1.0, 1.5, 2.0, 2.5, 3.0],
    "node_count": [10, 15, 20, 25],
}

COMMANDS = ("solve", "sweep", "compare", "oracle-check")

CSV_SCHEMA_HEADER = "# fso-multicast-sweep schema=1 timing=solver_call_including_set_enumeration"
CSV_COLUMNS = (
    "axis_name", "axis_value", "strategy", "trials",
    "mean_delay_s", "mean_avg_throughput_bps", "mean_solver_time_s",
)

# Global paths
PROJECT_ROOT = os.getcwd()
CONFIG_FILE = os.path.join(PROJECT_ROOT, ".multicast-config.json")

# =============================================================================
# DEFAULT CONFIGURATION
# =============================================================================

DEFAULT_CONFIG = {
    # Scenario generator and trial settings
    "simulation": {
        "node_count": 15,
        "rf_range": 150.0,
        "sector": math.pi / 2,
        "gps_error": 3.0,
        "data_size": 100 * BITS_PER_GB,
        "alignment_delay": 2.0,
        # Must exceed the largest swept GPS error (5 m).
        "min_node_distance": 20.0,
        "trials": 5000,
        "master_seed": 1729,
        "workers": 1,
    },

    # FSO physical layer
    "link": {
        "transmit_power_dbm": 13.0,
        "aperture_diameter": 0.012,
        "pointing_loss_tx": 1.0,
        "pointing_loss_rx": 1.0,
        "efficiency_tx": 1.0,
        "efficiency_rx": 1.0,
        "attenuation_db_per_km": 0.43,
        "wavelength": 1550e-9,
        "detector_sensitivity": 0.1875,
        # Recorded for reference only, nothing is sent over RF.
        "rf_rate_bps": 867e6,
    },

    # Set pricing
    "solver": {
        "theta_min": 1e-3,
        "theta_max": math.pi / 2,
        "charge_first_alignment": True,
    },

    # Exactness harness
    "oracle": {
        "brute_force_cap": 8,
        "trials": 200,
        "rel_tol": 1e-9,
    },

    "output": {
        "significant_digits": 9,
    },
}

PROFILES = {
    "full": {},
    "ci": {"simulation": {"trials": 500}},
}

# =============================================================================
# CONFIGURATION MANAGEMENT
# =============================================================================

def merge_config(base, overrides, _path="config"):
    """Deep-merge overrides into a copy of base, rejecting unknown keys."""
    merged = copy.deepcopy(base)
    if not isinstance(overrides, dict):
        raise ConfigError(f"{_path} must be a JSON object")
    for key, value in overrides.items():
        if key not in merged:
            raise ConfigError(f"Unknown config key: {_path}.{key}")
        if isinstance(merged[key], dict):
            merged[key] = merge_config(merged[key], value, f"{_path}.{key}")
        else:
            merged[key] = value
    return merged


def load_config(config_path=None, profile="full"):
    """
    Load configuration and merge it over DEFAULT_CONFIG.

    A missing default file is fine; an explicitly requested file that is
    missing or malformed raises ConfigError.
    """
    if profile not in PROFILES:
        raise ConfigError(f"Unknown profile '{profile}' (expected one of {', '.join(PROFILES)})")
    config = merge_config(DEFAULT_CONFIG, PROFILES[profile])

    path = config_path or CONFIG_FILE
    if not os.path.exists(path):
        if config_path:
            raise ConfigError(f"Config file not found: {config_path}")
        return config
    try:
        with open(path, "r", encoding="utf-8") as f:
            overrides = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Could not read config file {path}: {e}") from e
    return merge_config(config, overrides)


def get_configured_link_params(config):
    """Build FsoLinkParams from the 'link' section."""
    from .fso_link import FsoLinkParams
    return FsoLinkParams.from_config(config.get("link", DEFAULT_CONFIG["link"]))


def get_configured_solver_settings(config):
    """Get the 'solver' section merged with defaults."""
    return {**DEFAULT_CONFIG["solver"], **config.get("solver", {})}


def get_configured_sim_params(config):
    """Build SimParams from the 'simulation', 'link' and 'solver' sections."""
    from .simulator import SimParams
    return SimParams.from_config(config)


def get_configured_oracle_cap(config):
    """Get the largest node count the exhaustive oracle accepts (1..MAX_BRUTE_FORCE_CAP)."""
    cap = config.get("oracle", {}).get("brute_force_cap", DEFAULT_CONFIG["oracle"]["brute_force_cap"])
    if isinstance(cap, bool) or not isinstance(cap, int) or not 1 <= cap <= MAX_BRUTE_FORCE_CAP:
        raise ConfigError(f"oracle.brute_force_cap must be an integer in 1..{MAX_BRUTE_FORCE_CAP}, got {cap}")
    return int(cap)


def get_configured_significant_digits(config):
    """Get the number of significant digits written to CSV."""
    return int(config.get("output", {}).get("significant_digits", DEFAULT_CONFIG["output"]["significant_digits"]))
