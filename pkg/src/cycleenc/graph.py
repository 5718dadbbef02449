"""Graph data model, canonical edge indexing, and JSON serialization.

Edges are undirected but stored with the canonical orientation ``u < v``;
the position of an edge in :attr:`Graph.edges` is the edge index used by
every matrix in the package (incidence columns, cycle-vector bits,
projector rows). All graph values are immutable and safe to share.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    DuplicateEdgeError,
    EndpointOutOfRangeError,
    NonPositiveWeightError,
    ParseError,
    SchemaVersionMismatchError,
    SelfLoopError,
)

__all__ = [
    "Graph",
    "build_graph",
    "adjacency",
    "components",
    "component_count",
    "save_graph",
    "load_graph",
    "graph_to_dict",
    "graph_from_dict",
]

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with canonically oriented, indexed edges.

    Attributes
    ----------
    n : int
        Node count; node ids are ``0..n-1``.
    edges : tuple of (int, int)
        Edge list with ``u < v`` per edge; tuple position is the edge index.
    weights : tuple of float, optional
        Positive per-edge weights. ``None`` means unit weights.
    coords : tuple of tuple of float, optional
        Per-node coordinates (point-cloud graphs).
    labels : tuple of str, optional
        Per-node tags recording generator provenance.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[float, ...] | None = None
    coords: tuple[tuple[float, ...], ...] | None = None
    labels: tuple[str, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_weight(self, j: int) -> float:
        return 1.0 if self.weights is None else self.weights[j]

    def has_unit_weights(self) -> bool:
        return self.weights is None or all(w == 1.0 for w in self.weights)


def build_graph(
    n: int,
    edge_list: Iterable[tuple[int, int]],
    weights: Sequence[float] | None = None,
    coords: Sequence[Sequence[float]] | None = None,
    labels: Sequence[str] | None = None,
) -> Graph:
    """Validate and canonicalize raw edge data into a :class:`Graph`.

    Endpoints are swapped to ``(min, max)``; edge indices follow the input
    order after canonicalization. Self-loops and duplicates (including
    duplicates that only collide after canonicalization) are errors, not
    silently dropped.
    """
    if n < 0:
        raise EndpointOutOfRangeError(f"negative node count {n}")
    canonical: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRangeError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at node {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
        canonical.append(e)
    weights_t: tuple[float, ...] | None = None
    if weights is not None:
        weights_t = tuple(float(w) for w in weights)
        if len(weights_t) != len(canonical):
            raise NonPositiveWeightError(
                f"{len(weights_t)} weights for {len(canonical)} edges"
            )
        for w in weights_t:
            if not w > 0:
                raise NonPositiveWeightError(f"non-positive weight {w}")
    coords_t: tuple[tuple[float, ...], ...] | None = None
    if coords is not None:
        coords_t = tuple(tuple(float(x) for x in row) for row in coords)
        if len(coords_t) != n:
            raise ParseError(f"{len(coords_t)} coordinate rows for n={n}")
    labels_t: tuple[str, ...] | None = None
    if labels is not None:
        labels_t = tuple(str(s) for s in labels)
        if len(labels_t) != n:
            raise ParseError(f"{len(labels_t)} labels for n={n}")
    return Graph(n=n, edges=tuple(canonical), weights=weights_t, coords=coords_t, labels=labels_t)


def adjacency(g: Graph) -> list[list[tuple[int, int]]]:
    """Adjacency lists as ``adj[u] = [(neighbor, edge_index), ...]`` sorted by neighbor id."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for j, (u, v) in enumerate(g.edges):
        adj[u].append((v, j))
        adj[v].append((u, j))
    for lst in adj:
        lst.sort()
    return adj


class _DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def components(g: Graph) -> list[int]:
    """Component id per node (ids are the minimum node id of each component)."""
    dsu = _DisjointSet(g.n)
    for u, v in g.edges:
        dsu.union(u, v)
    return [dsu.find(i) for i in range(g.n)]


def component_count(g: Graph) -> int:
    return len(set(components(g))) if g.n else 0


# ---------------------------------------------------------------------------
# JSON schema v1
# ---------------------------------------------------------------------------


def graph_to_dict(g: Graph) -> dict:
    doc: dict = {"version": SCHEMA_VERSION, "n": g.n, "edges": [list(e) for e in g.edges]}
    if g.weights is not None:
        doc["weights"] = list(g.weights)
    if g.coords is not None:
        doc["coords"] = [list(row) for row in g.coords]
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return doc


def graph_from_dict(doc: dict) -> Graph:
    if not isinstance(doc, dict):
        raise ParseError("graph document is not a JSON object")
    version = doc.get("version")
    if version != SCHEMA_VERSION:
        raise SchemaVersionMismatchError(f"schema version {version!r}, expected {SCHEMA_VERSION}")
    for key in ("n", "edges"):
        if key not in doc:
            raise ParseError(f"missing required key {key!r}")
    try:
        return build_graph(
            int(doc["n"]),
            [(int(u), int(v)) for u, v in doc["edges"]],
            weights=doc.get("weights"),
            coords=doc.get("coords"),
            labels=doc.get("labels"),
        )
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph document: {exc}") from exc


def save_graph(g: Graph, path: str | Path) -> None:
    """Write the canonical JSON schema (UTF-8, sorted keys, byte-stable)."""
    payload = json.dumps(graph_to_dict(g), sort_keys=True, separators=(",", ":"))
    Path(path).write_text(payload + "\n", encoding="utf-8")


def load_graph(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    return graph_from_dict(doc)
