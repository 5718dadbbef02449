"""Deterministic generators for the graph families used by the test harnesses.

The two strongly regular graphs here are the classic srg(16,6,2,2) pair:
the 4x4 rook graph and the Shrikhande graph (built as a Cayley graph on
Z4 x Z4). The Cai-Furer-Immerman family produces, per level ``l``, the
standard WL-hard graphs on ``(k+1) * 2^(k-1)`` nodes. The point cloud
family samples small circles centered on a large circle and links them
with a symmetric kNN rule.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidCfiParamsError, ParseError
from .graph import Graph, build_graph, load_graph

__all__ = [
    "gen_rook4x4",
    "gen_shrikhande",
    "gen_cfi",
    "gen_cycle_point_cloud",
    "GeneratorSpec",
    "make_graph",
]


def gen_rook4x4() -> Graph:
    """4x4 rook graph: nodes are grid cells, edges join same row or column.

    6-regular on 16 nodes, 48 edges. Node id of cell (r, c) is ``4*r + c``.
    """
    edges = []
    for i in range(16):
        for j in range(i + 1, 16):
            if i // 4 == j // 4 or i % 4 == j % 4:
                edges.append((i, j))
    labels = tuple(f"cell({i // 4},{i % 4})" for i in range(16))
    return build_graph(16, edges, labels=labels)


def gen_shrikhande() -> Graph:
    """Shrikhande graph as the Cayley graph on Z4 x Z4.

    Connection set {+-(1,0), +-(0,1), +-(1,1)}; node id of (a, b) is
    ``4*a + b``. Shares srg(16,6,2,2) with the rook graph but is not
    isomorphic to it.
    """
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for i in range(16):
        for j in range(i + 1, 16):
            d = ((i // 4 - j // 4) % 4, (i % 4 - j % 4) % 4)
            if d in conn:
                edges.append((i, j))
    labels = tuple(f"z4sq({i // 4},{i % 4})" for i in range(16))
    return build_graph(16, edges, labels=labels)


def _parity(bits: tuple[int, ...]) -> int:
    return sum(bits) % 2


def gen_cfi(k: int, l: int) -> Graph:
    """Cai-Furer-Immerman graph G_k^(l) on ``(k+1) * 2^(k-1)`` nodes.

    Nodes are pairs ``(a, v)`` with block ``a`` in 1..k+1 and ``v`` a
    k-bit vector whose parity is even for blocks ``a <= k-l+1`` and odd
    otherwise. Two nodes in distinct blocks are adjacent iff, with
    ``m = (a' - a) mod (k+1)``, bit ``m`` of ``v`` (1-based from the left)
    equals bit ``k-m+1`` of ``v'``; the rule is symmetric in the pair.

    Blocks are emitted in order, vectors in lexicographic order, so node
    ids are reproducible. Labels record ``(a, v)``.
    """
    if k < 2:
        raise InvalidCfiParamsError(f"k={k}, need k >= 2")
    if not 0 <= l <= k + 1:
        raise InvalidCfiParamsError(f"l={l}, need 0 <= l <= k+1={k + 1}")
    nodes: list[tuple[int, tuple[int, ...]]] = []
    for a in range(1, k + 2):
        want_odd = a >= k - l + 2
        for bits in itertools.product((0, 1), repeat=k):
            if _parity(bits) == (1 if want_odd else 0):
                nodes.append((a, bits))
    edges = []
    for i, (a, v) in enumerate(nodes):
        for j in range(i + 1, len(nodes)):
            a2, v2 = nodes[j]
            if a2 == a:
                continue
            m = (a2 - a) % (k + 1)
            if v[m - 1] == v2[k - m]:
                edges.append((i, j))
    labels = tuple(f"u[{a}]({''.join(map(str, v))})" for a, v in nodes)
    return build_graph(len(nodes), edges, labels=labels)


def gen_cycle_point_cloud(
    seed: int,
    n_large: int = 20,
    n_small: int = 60,
    d_large: float = 20.0,
    d_small: float = 1.0,
    knn_k: int = 3,
) -> Graph:
    """Point cloud of small circles centered on a large circle, linked by kNN.

    ``n_large`` points are sampled uniformly on a circle of diameter
    ``d_large`` and stored in angular order (node ids 0..n_large-1); the
    remaining ``n_small`` points lie on circles of diameter ``d_small``
    whose centers are those large-circle points, assigned round-robin in
    angular order. Edges follow the symmetric kNN rule: (i, j) is an edge
    if either point ranks the other among its ``knn_k`` nearest neighbors
    (Euclidean distance, ties broken by lower node id).

    All randomness comes from a single numpy PCG64 stream seeded with
    ``seed`` and drawn in a fixed order (large angles, then small angles),
    so outputs are identical across platforms and runs.
    """
    if n_large <= 0 or n_small < 0:
        raise InvalidCfiParamsError("point counts must be positive")
    if knn_k < 1:
        raise InvalidCfiParamsError(f"knn_k={knn_k}, need >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    large_angles = np.sort(rng.uniform(0.0, 2.0 * math.pi, size=n_large))
    r_large = d_large / 2.0
    centers = np.stack(
        [r_large * np.cos(large_angles), r_large * np.sin(large_angles)], axis=1
    )
    small_angles = rng.uniform(0.0, 2.0 * math.pi, size=n_small)
    r_small = d_small / 2.0
    small = np.empty((n_small, 2))
    for i in range(n_small):
        c = centers[i % n_large]
        small[i] = c + r_small * np.array(
            [math.cos(small_angles[i]), math.sin(small_angles[i])]
        )
    pts = np.vstack([centers, small])
    n = pts.shape[0]
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt((diff**2).sum(axis=2))
    edges: set[tuple[int, int]] = set()
    for i in range(n):
        order = sorted((dist[i, j], j) for j in range(n) if j != i)
        for _, j in order[:knn_k]:
            edges.add((min(i, j), max(i, j)))
    edge_list = sorted(edges)
    return build_graph(n, edge_list, coords=[tuple(p) for p in pts])


@dataclass(frozen=True)
class GeneratorSpec:
    """Named graph family plus its parameters; dispatched by :func:`make_graph`."""

    family: str
    params: dict = field(default_factory=dict)

    _FAMILIES = ("rook4x4", "shrikhande", "cfi", "cycle_point_cloud", "json_file")

    def __post_init__(self) -> None:
        if self.family not in self._FAMILIES:
            raise ParseError(f"unknown generator family {self.family!r}")


def make_graph(spec: GeneratorSpec) -> Graph:
    if spec.family == "rook4x4":
        return gen_rook4x4()
    if spec.family == "shrikhande":
        return gen_shrikhande()
    if spec.family == "cfi":
        return gen_cfi(int(spec.params["k"]), int(spec.params["l"]))
    if spec.family == "cycle_point_cloud":
        allowed = ("seed", "n_large", "n_small", "d_large", "d_small", "knn_k")
        kwargs = {k: v for k, v in spec.params.items() if k in allowed}
        return gen_cycle_point_cloud(**kwargs)
    return load_graph(spec.params["path"])
