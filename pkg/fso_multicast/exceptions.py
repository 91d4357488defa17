"""
Exception hierarchy for the FSO multicast planner.

Library code raises these; only the CLI maps them to exit statuses.
"""


class MulticastError(Exception):
    """Base class for all planner errors."""


class DegeneratePositionError(MulticastError, ValueError):
    """A receiver sits on the transmitter (the origin)."""

    def __init__(self, message, node_id=None):
        super().__init__(message)
        self.node_id = node_id


class GpsErrorTooLargeError(MulticastError, ValueError):
    """The GPS error radius reaches or exceeds a node's distance."""

    def __init__(self, message, node_id=None):
        super().__init__(message)
        self.node_id = node_id


class SectorViolationError(MulticastError, ValueError):
    """A node's uncertainty interval leaves the configured sector."""

    def __init__(self, message, node_id=None):
        super().__init__(message)
        self.node_id = node_id


class SetIndexError(MulticastError, IndexError):
    """A set boundary lies outside the scenario's node range."""


class InvalidParamsError(MulticastError, ValueError):
    """Physical, solver or simulation parameters violate their invariants."""


class InfeasibleSetError(MulticastError):
    """A candidate set needs a wider beam than theta_max."""


class InfeasibleScenarioError(MulticastError):
    """No plan of the requested kind exists within theta_max."""


class ConfigError(MulticastError):
    """Malformed configuration, unknown keys or bad command-line values."""


class ScenarioFileError(MulticastError):
    """A scenario file could not be read or parsed."""
