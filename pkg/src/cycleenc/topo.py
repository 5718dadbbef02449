"""Node filter functions and cycle-level extended persistence pairs.

A persistence pair here is the (max, min) of a node filter over one basis
cycle -- the cycle-wise reduction of extended persistence, not the full
boundary-matrix algorithm.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, NoCoordinatesError, UnreachableNodesError
from .graph import Graph, adjacency

__all__ = [
    "FilterAssignment",
    "PersistencePair",
    "sssp_filter",
    "coordinate_filter",
    "cycle_epd",
    "epd_multisets_equal",
]


@dataclass(frozen=True)
class FilterAssignment:
    """Node filter values plus the derived per-edge values.

    ``edge_values[e] = mode(node_values[u], node_values[v])`` for edge
    e = (u, v), with mode "min" or "max".
    """

    node_values: np.ndarray
    edge_values: np.ndarray
    mode: str


@dataclass(frozen=True, order=True)
class PersistencePair:
    """(hi, lo) of a node filter over one cycle; hi >= lo always."""

    hi: float
    lo: float


def _derive_edge_values(g: Graph, node_values: np.ndarray, mode: str) -> np.ndarray:
    if mode not in ("min", "max"):
        raise DimensionMismatchError(f"edge derivation mode {mode!r}, need 'min' or 'max'")
    pick = min if mode == "min" else max
    return np.array([pick(node_values[u], node_values[v]) for u, v in g.edges])


def sssp_filter(g: Graph, root: int, mode: str = "min") -> FilterAssignment:
    """Hop distance from ``root`` plus one (the root itself gets 1).

    Raises if any node is unreachable from the root.
    """
    if not 0 <= root < g.n:
        raise DimensionMismatchError(f"root {root} out of range for n={g.n}")
    dist = np.full(g.n, math.inf)
    dist[root] = 0.0
    adj = adjacency(g)
    dq = deque([root])
    while dq:
        u = dq.popleft()
        for v, _ in adj[u]:
            if math.isinf(dist[v]):
                dist[v] = dist[u] + 1.0
                dq.append(v)
    if np.isinf(dist).any():
        missing = [i for i in range(g.n) if math.isinf(dist[i])]
        raise UnreachableNodesError(f"nodes unreachable from root {root}: {missing}")
    node_values = dist + 1.0
    return FilterAssignment(node_values, _derive_edge_values(g, node_values, mode), mode)


def coordinate_filter(g: Graph, axis: int, mode: str = "min") -> FilterAssignment:
    """Node coordinate along one axis as the filter value."""
    if g.coords is None:
        raise NoCoordinatesError("graph has no node coordinates")
    dim = len(g.coords[0]) if g.coords else 0
    if not 0 <= axis < dim:
        raise NoCoordinatesError(f"axis {axis} out of range for {dim}-d coordinates")
    node_values = np.array([row[axis] for row in g.coords])
    return FilterAssignment(node_values, _derive_edge_values(g, node_values, mode), mode)


def cycle_epd(basis, f: FilterAssignment) -> list[PersistencePair]:
    """(max, min) of the node filter over each basis cycle, in basis order."""
    g = basis.graph
    if f.node_values.shape != (g.n,):
        raise DimensionMismatchError(
            f"filter has {f.node_values.shape[0]} values for n={g.n}"
        )
    pairs = []
    for cyc in basis.cycles:
        nodes = set()
        for i in cyc.edge_indices():
            u, v = g.edges[i]
            nodes.add(u)
            nodes.add(v)
        values = [f.node_values[u] for u in nodes]
        pairs.append(PersistencePair(hi=float(max(values)), lo=float(min(values))))
    return pairs


def epd_multisets_equal(
    a: list[PersistencePair], b: list[PersistencePair], tol: float = 1e-9
) -> bool:
    """Multiset comparison via sorted order, with tolerance on float values."""
    if len(a) != len(b):
        return False
    sa, sb = sorted(a), sorted(b)
    return all(
        abs(x.hi - y.hi) <= tol and abs(x.lo - y.lo) <= tol for x, y in zip(sa, sb)
    )
