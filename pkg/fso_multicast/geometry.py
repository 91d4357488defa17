"""
geometry.py

Transmitter-centric geometry: azimuth/distance of each receiver, the
GPS-uncertainty half-angle around it, and the narrowest beam that covers a
run of azimuth-adjacent receivers.
"""

import math
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .exceptions import (
    DegeneratePositionError,
    GpsErrorTooLargeError,
    SectorViolationError,
    SetIndexError,
)

TWO_PI = 2.0 * math.pi

# Slack for interval-in-sector checks after the polar round trip.
SECTOR_TOLERANCE = 1e-9


@dataclass(frozen=True)
class NodePosition:
    """A receiver location in meters, transmitter at the origin."""
    id: int
    x: float
    y: float


@dataclass(frozen=True)
class PolarNode:
    """A receiver as seen from the transmitter."""
    id: int
    azimuth: float
    distance: float
    half_angle: float

    @property
    def lower_edge(self) -> float:
        return self.azimuth - self.half_angle

    @property
    def upper_edge(self) -> float:
        return self.azimuth + self.half_angle

    def to_position(self) -> NodePosition:
        return NodePosition(
            id=self.id,
            x=self.distance * math.cos(self.azimuth),
            y=self.distance * math.sin(self.azimuth),
        )


@dataclass(frozen=True)
class Scenario:
    """
    Receivers sorted by strictly descending azimuth.

    Ties in azimuth are broken by ascending distance, then ascending id.
    `sector` is the upper bound of the angular sector [0, sector] every
    uncertainty interval must fit in.
    """
    nodes: Tuple[PolarNode, ...]
    gps_error: float
    sector: float = math.pi / 2
    _upper: np.ndarray = field(init=False, repr=False, compare=False)
    _lower: np.ndarray = field(init=False, repr=False, compare=False)
    _distances: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "_upper", np.array([n.upper_edge for n in self.nodes], dtype=float))
        object.__setattr__(self, "_lower", np.array([n.lower_edge for n in self.nodes], dtype=float))
        object.__setattr__(self, "_distances", np.array([n.distance for n in self.nodes], dtype=float))

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def ids(self) -> List[int]:
        return [n.id for n in self.nodes]

    @property
    def distances(self) -> np.ndarray:
        return self._distances

    @property
    def sector_span(self) -> float:
        """Angular extent of the union of all uncertainty intervals."""
        if not self.nodes:
            return 0.0
        return float(self._upper.max() - self._lower.min())

    def check_index_range(self, first: int, last: int) -> None:
        if not (0 <= first <= last < len(self.nodes)):
            raise SetIndexError(
                f"Set [{first}..{last}] is outside node range 0..{len(self.nodes) - 1}"
            )


# =============================================================================
# OPERATIONS
# =============================================================================

def azimuth(position: NodePosition) -> float:
    """Counterclockwise angle from the positive x-axis, in [0, 2*pi)."""
    if position.x == 0.0 and position.y == 0.0:
        raise DegeneratePositionError(
            f"Node {position.id} is at the origin, where the transmitter sits",
            node_id=position.id,
        )
    phi = math.atan2(position.y, position.x)
    if phi < 0.0:
        phi += TWO_PI
    # atan2 of a tiny negative y rounds up to exactly 2*pi
    if phi >= TWO_PI:
        phi = 0.0
    return phi


def uncertainty_half_angle(distance: float, gps_error: float) -> float:
    """Half-angle of the tangents from the origin to a disk of radius gps_error."""
    if gps_error < 0:
        raise GpsErrorTooLargeError(f"GPS error must be non-negative, got {gps_error}")
    if gps_error >= distance:
        raise GpsErrorTooLargeError(
            f"GPS error {gps_error} m is not smaller than node distance {distance} m"
        )
    return math.asin(gps_error / distance)


def to_polar_sorted(
    positions: Iterable[NodePosition],
    gps_error: float,
    sector: float = math.pi / 2,
) -> Scenario:
    """
    Convert receiver positions to a Scenario in descending-azimuth order.

    Raises DegeneratePositionError for a node at the origin,
    GpsErrorTooLargeError when gps_error >= a node's distance and
    SectorViolationError when an uncertainty interval leaves [0, sector].
    """
    positions = list(positions)
    if not positions:
        raise DegeneratePositionError("A scenario needs at least one receiver")

    polar = []
    for position in positions:
        phi = azimuth(position)
        distance = math.hypot(position.x, position.y)
        if gps_error >= distance:
            raise GpsErrorTooLargeError(
                f"GPS error {gps_error} m is not smaller than the {distance:.6g} m "
                f"distance of node {position.id}",
                node_id=position.id,
            )
        beta = uncertainty_half_angle(distance, gps_error)
        if phi - beta < -SECTOR_TOLERANCE or phi + beta > sector + SECTOR_TOLERANCE:
            raise SectorViolationError(
                f"Node {position.id} spans [{math.degrees(phi - beta):.3f}, "
                f"{math.degrees(phi + beta):.3f}] deg, outside the "
                f"[0, {math.degrees(sector):.3f}] deg sector",
                node_id=position.id,
            )
        polar.append(PolarNode(id=position.id, azimuth=phi, distance=distance, half_angle=beta))

    # np.lexsort sorts by the last key first
    order = np.lexsort((
        np.array([n.id for n in polar]),
        np.array([n.distance for n in polar]),
        -np.array([n.azimuth for n in polar]),
    ))
    return Scenario(nodes=tuple(polar[i] for i in order), gps_error=gps_error, sector=sector)


def covering_angle(scenario: Scenario, first: int, last: int, theta_min: float) -> float:
    """
    Narrowest divergence angle whose footprint holds nodes first..last.

    This is the extent of the union of their uncertainty intervals, floored
    at theta_min.
    """
    scenario.check_index_range(first, last)
    upper = scenario._upper[first:last + 1].max()
    lower = scenario._lower[first:last + 1].min()
    return max(theta_min, float(upper - lower))


def covering_angles_from(scenario: Scenario, first: int, theta_min: float) -> np.ndarray:
    """covering_angle(first, last) for every last in first..N-1, in one pass."""
    scenario.check_index_range(first, first)
    upper = np.maximum.accumulate(scenario._upper[first:])
    lower = np.minimum.accumulate(scenario._lower[first:])
    return np.maximum(theta_min, upper - lower)


def positions_from_pairs(pairs: Sequence[Tuple[float, float]]) -> List[NodePosition]:
    """Number (x, y) pairs as NodePositions with ids 0..n-1."""
    return [NodePosition(id=i, x=float(x), y=float(y)) for i, (x, y) in enumerate(pairs)]
