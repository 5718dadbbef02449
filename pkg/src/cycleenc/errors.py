"""Exception taxonomy shared by the whole package.

Every error raised by cycleenc derives from :class:`CycleEncError`, so
callers (and the CLI exit-code mapping) can catch one base class.
"""

from __future__ import annotations

__all__ = [
    "CycleEncError",
    "GraphConstructionError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "EndpointOutOfRangeError",
    "NonPositiveWeightError",
    "ParseError",
    "SchemaVersionMismatchError",
    "InvalidCfiParamsError",
    "DimensionMismatchError",
    "RankDeficientError",
    "TooLargeError",
    "UnreachableNodesError",
    "NoCoordinatesError",
    "UnknownFamilyError",
    "UnknownEncoderError",
]


class CycleEncError(Exception):
    """Base class for all cycleenc errors."""


class GraphConstructionError(CycleEncError):
    """Invalid node/edge data passed to a graph constructor."""


class SelfLoopError(GraphConstructionError):
    pass


class DuplicateEdgeError(GraphConstructionError):
    pass


class EndpointOutOfRangeError(GraphConstructionError):
    pass


class NonPositiveWeightError(GraphConstructionError):
    pass


class ParseError(CycleEncError):
    """Malformed graph file (bad JSON or missing required keys)."""


class SchemaVersionMismatchError(ParseError):
    """Graph file declares a schema version this library does not read."""


class InvalidCfiParamsError(CycleEncError):
    """CFI generator parameters outside k >= 2, 0 <= l <= k+1."""


class DimensionMismatchError(CycleEncError):
    """Vector/matrix shapes inconsistent with the graph or declared dims."""


class RankDeficientError(CycleEncError):
    """Candidate cycles do not span the cycle space."""


class TooLargeError(CycleEncError):
    """Input exceeds the size bound of an exhaustive algorithm."""


class UnreachableNodesError(CycleEncError):
    """Shortest-path filter requested on a graph with unreachable nodes."""


class NoCoordinatesError(CycleEncError):
    """Coordinate filter requested on a graph without node coordinates."""


class UnknownFamilyError(CycleEncError):
    """Encoding family name not present in the registry."""


class UnknownEncoderError(CycleEncError):
    """Encoder spec string does not name a known encoder."""
