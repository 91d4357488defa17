"""
Utility functions for scenario files, unit conversion and text cleanup.
"""

import json
import math
import os
import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .config import BITS_PER_GB, DEFAULT_CONFIG
from .exceptions import ScenarioFileError
from .geometry import NodePosition, Scenario, to_polar_sorted

# =============================================================================
# UTILITY FUNCTIONS
# =============================================================================

def remove_ansi_colors(text):
    """Remove ANSI color codes from text."""
    if not text:
        return ""
    return re.sub(r"\033\[[0-9;]*m", "", text)


def gb_to_bits(gigabytes: float) -> float:
    """Decimal gigabytes to bits."""
    return gigabytes * BITS_PER_GB


def bits_to_gb(bits: float) -> float:
    """Bits to decimal gigabytes."""
    return bits / BITS_PER_GB


def format_sig(value: float, digits: int = 9) -> str:
    """Format a float with a fixed number of significant digits."""
    return f"{value:.{digits}g}"


def read_file_content(file_path: str) -> str:
    """
    Reads the content of a file.

    Raises:
        ScenarioFileError: if the file cannot be read.
    """
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return f.read()
    except (FileNotFoundError, IOError, UnicodeDecodeError) as e:
        raise ScenarioFileError(f"Could not read {file_path}: {e}") from e

# =============================================================================
# SCENARIO FILES
# =============================================================================
#
# A scenario file is a JSON object:
#   {
#     "gps_error": 3.0,                     meters, required
#     "sector": 1.5707963267948966,         radians, optional
#     "link": {"transmit_power_dbm": 13},   optional, keys of the config 'link' section
#     "data_size": 8e11,                    bits, optional
#     "alignment_delay": 2.0,               seconds, optional
#     "nodes": [{"id": 0, "x": 50.0, "y": 86.6}, ...]
#   }

SCENARIO_KEYS = {"gps_error", "sector", "link", "data_size", "alignment_delay", "nodes"}
NODE_KEYS = {"id", "x", "y"}


@dataclass
class ScenarioFile:
    positions: List[NodePosition]
    gps_error: float
    sector: float = DEFAULT_CONFIG["simulation"]["sector"]
    link: Dict[str, Any] = field(default_factory=dict)
    data_size: Optional[float] = None
    alignment_delay: Optional[float] = None

    def to_scenario(self) -> Scenario:
        return to_polar_sorted(self.positions, self.gps_error, self.sector)


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ScenarioFileError(f"{where} must be a finite number, got {value!r}")
    return float(value)


def parse_scenario(data: Dict[str, Any], source: str = "<scenario>") -> ScenarioFile:
    """Validate a decoded scenario document."""
    if not isinstance(data, dict):
        raise ScenarioFileError(f"{source}: top level must be a JSON object")
    unknown = set(data) - SCENARIO_KEYS
    if unknown:
        raise ScenarioFileError(f"{source}: unknown keys {', '.join(sorted(unknown))}")
    if "gps_error" not in data or "nodes" not in data:
        raise ScenarioFileError(f"{source}: 'gps_error' and 'nodes' are required")

    link = data.get("link", {})
    if not isinstance(link, dict):
        raise ScenarioFileError(f"{source}: 'link' must be an object")
    unknown_link = set(link) - set(DEFAULT_CONFIG["link"])
    if unknown_link:
        raise ScenarioFileError(f"{source}: unknown link keys {', '.join(sorted(unknown_link))}")

    nodes = data["nodes"]
    if not isinstance(nodes, list) or not nodes:
        raise ScenarioFileError(f"{source}: 'nodes' must be a non-empty list")
    positions = []
    seen = set()
    for record in nodes:
        if not isinstance(record, dict) or set(record) != NODE_KEYS:
            raise ScenarioFileError(f"{source}: every node needs exactly the keys id, x, y: {record!r}")
        node_id = record["id"]
        if isinstance(node_id, bool) or not isinstance(node_id, int):
            raise ScenarioFileError(f"{source}: node id must be an integer, got {node_id!r}")
        if node_id in seen:
            raise ScenarioFileError(f"{source}: duplicate node id {node_id}")
        seen.add(node_id)
        positions.append(NodePosition(
            id=node_id,
            x=_number(record["x"], f"node {node_id} x"),
            y=_number(record["y"], f"node {node_id} y"),
        ))

    return ScenarioFile(
        positions=positions,
        gps_error=_number(data["gps_error"], "gps_error"),
        sector=_number(data.get("sector", DEFAULT_CONFIG["simulation"]["sector"]), "sector"),
        link=dict(link),
        data_size=_number(data["data_size"], "data_size") if "data_size" in data else None,
        alignment_delay=_number(data["alignment_delay"], "alignment_delay") if "alignment_delay" in data else None,
    )


def load_scenario_file(file_path: str) -> ScenarioFile:
    """Read and validate a scenario file."""
    content = read_file_content(file_path)
    try:
        data = json.loads(content)
    except json.JSONDecodeError as e:
        raise ScenarioFileError(f"{file_path}: invalid JSON: {e}") from e
    return parse_scenario(data, source=os.path.basename(file_path))


def scenario_to_dict(scenario: Scenario) -> Dict[str, Any]:
    """Serialise a Scenario back into the scenario-file layout."""
    nodes = []
    for node in sorted(scenario.nodes, key=lambda n: n.id):
        position = node.to_position()
        nodes.append({"id": node.id, "x": position.x, "y": position.y})
    return {"gps_error": scenario.gps_error, "sector": scenario.sector, "nodes": nodes}


def save_scenario_file(file_path: str, scenario: Scenario) -> None:
    with open(file_path, "w", encoding="utf-8") as f:
        json.dump(scenario_to_dict(scenario), f, indent=2)
        f.write("\n")
