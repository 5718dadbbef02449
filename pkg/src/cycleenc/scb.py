"""Shortest cycle basis over Z2 and the cycle incidence matrix.

Cycles are length-m bitsets (Python ints). Candidates come from the
Horton construction: for every source node, the shortest-path tree turns
each edge into the cycle ``tree_path(x) XOR tree_path(y) XOR {e}``. Any
such vector is a single simple cycle, every cycle of the graph is a Z2
sum of candidates of no greater weight, and greedy weight-ordered GF(2)
column reduction over the candidate set therefore reaches the minimum
possible total weight.
"""

from __future__ import annotations

import heapq
import os
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import RankDeficientError, TooLargeError
from .graph import Graph, adjacency
from .hodge import betti_number
from .peoi import EdgeFeatureMatrix

__all__ = [
    "Z2CycleVector",
    "CandidateSet",
    "CycleBasis",
    "CycleIncidenceMatrix",
    "horton_candidates",
    "matrix_reduction",
    "shortest_cycle_basis",
    "cycle_incidence",
    "scb_length_histogram",
    "scb_edge_embedding",
    "brute_force_scb",
]

BRUTE_FORCE_MAX_EDGES = 14


@dataclass(frozen=True)
class Z2CycleVector:
    """Cycle as a bitset over edge indices, plus its total edge weight."""

    bits: int
    weight: float
    m: int

    @property
    def length(self) -> int:
        """Number of edges in the cycle."""
        return self.bits.bit_count()

    def edge_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.m) if (self.bits >> i) & 1)

    def sort_key(self) -> tuple[float, tuple[int, ...]]:
        return (self.weight, self.edge_indices())


@dataclass(frozen=True)
class CandidateSet:
    """Deduplicated candidate cycles sorted by (weight, lexicographic bitset)."""

    graph: Graph
    cycles: tuple[Z2CycleVector, ...]

    @property
    def l(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True)
class CycleBasis:
    """Cycle-space basis in ascending (weight, lexicographic) order."""

    graph: Graph
    cycles: tuple[Z2CycleVector, ...]

    @property
    def g(self) -> int:
        return len(self.cycles)

    def total_weight(self) -> float:
        return sum(c.weight for c in self.cycles)


@dataclass(frozen=True)
class CycleIncidenceMatrix:
    """m x g binary matrix; column j indicates the edges of basis cycle j."""

    matrix: np.ndarray  # (m, g) uint8


def _cycle_weight(g: Graph, bits: int) -> float:
    if g.weights is None:
        return float(bits.bit_count())
    return sum(g.weights[i] for i in range(g.m) if (bits >> i) & 1)


def _shortest_path_bits(g: Graph, adj, source: int) -> dict[int, int]:
    """Bitset of the shortest-path tree path source -> v, for reachable v.

    BFS for unit weights, Dijkstra otherwise; equal-distance ties keep the
    lowest-id predecessor so trees are deterministic.
    """
    if g.has_unit_weights():
        bits = {source: 0}
        dq = deque([source])
        while dq:
            u = dq.popleft()
            for v, e in adj[u]:
                if v not in bits:
                    bits[v] = bits[u] | (1 << e)
                    dq.append(v)
        return bits
    dist: dict[int, float] = {source: 0.0}
    pred: dict[int, tuple[int, int]] = {}
    done: set[int] = set()
    heap: list[tuple[float, int]] = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        for v, e in adj[u]:
            nd = d + g.edge_weight(e)
            if v not in dist or nd < dist[v]:
                dist[v] = nd
                pred[v] = (u, e)
                heapq.heappush(heap, (nd, v))
            elif v not in done and nd == dist[v] and u < pred[v][0]:
                pred[v] = (u, e)
    bits = {source: 0}
    for v in sorted(done, key=lambda x: (dist[x], x)):
        if v == source:
            continue
        u, e = pred[v]
        bits[v] = bits[u] | (1 << e)
    return bits


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("CYCLE_ENCODE_THREADS", "1")))
    except ValueError:
        return 1


def horton_candidates(g: Graph) -> CandidateSet:
    """Candidate cycles from per-source shortest-path trees.

    For each source v and edge (x, y) in v's component, the vector
    ``path(v,x) XOR path(v,y) XOR {(x,y)}`` is either empty (tree edge) or
    a single simple cycle; the union over all sources contains a minimum
    cycle basis. Candidates are deduplicated and sorted by weight with
    lexicographic tie-break.
    """
    adj = adjacency(g)

    def per_source(source: int) -> list[int]:
        bits = _shortest_path_bits(g, adj, source)
        out = []
        for e, (x, y) in enumerate(g.edges):
            if x in bits and y in bits:
                c = bits[x] ^ bits[y] ^ (1 << e)
                if c:
                    out.append(c)
        return out

    workers = _worker_count()
    if workers > 1 and g.n > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(per_source, range(g.n)))
    else:
        chunks = [per_source(v) for v in range(g.n)]
    unique = {c for chunk in chunks for c in chunk}
    cycles = sorted(
        (Z2CycleVector(c, _cycle_weight(g, c), g.m) for c in unique),
        key=Z2CycleVector.sort_key,
    )
    return CandidateSet(g, tuple(cycles))


def matrix_reduction(candidates: CandidateSet) -> CycleBasis:
    """Greedy GF(2) column reduction keeping the original surviving columns.

    Columns are processed in ascending weight order; each column is
    reduced against earlier reduced columns sharing its pivot (highest set
    bit). A column that stays nonzero contributes its original,
    pre-reduction cycle to the basis. Stops once Betti-many independent
    cycles are found; raises if the candidates do not span.
    """
    target = betti_number(candidates.graph)
    pivots: dict[int, int] = {}
    basis: list[Z2CycleVector] = []
    for cand in candidates.cycles:
        cur = cand.bits
        while cur:
            low = cur.bit_length() - 1
            if low not in pivots:
                break
            cur ^= pivots[low]
        if cur:
            pivots[cur.bit_length() - 1] = cur
            basis.append(cand)
            if len(basis) == target:
                break
    if len(basis) != target:
        raise RankDeficientError(
            f"candidates span {len(basis)} of {target} cycle-space dimensions"
        )
    return CycleBasis(candidates.graph, tuple(basis))


def shortest_cycle_basis(g: Graph) -> CycleBasis:
    """Horton candidates followed by matrix reduction."""
    return matrix_reduction(horton_candidates(g))


def cycle_incidence(basis: CycleBasis) -> CycleIncidenceMatrix:
    m = basis.graph.m
    X = np.zeros((m, basis.g), dtype=np.uint8)
    for j, cyc in enumerate(basis.cycles):
        for i in cyc.edge_indices():
            X[i, j] = 1
    return CycleIncidenceMatrix(X)


def scb_length_histogram(basis: CycleBasis) -> dict[int, int]:
    """Multiset of basis cycle lengths (edge counts) as length -> count."""
    hist: dict[int, int] = {}
    for cyc in basis.cycles:
        hist[cyc.length] = hist.get(cyc.length, 0) + 1
    return dict(sorted(hist.items()))


def scb_edge_embedding(basis: CycleBasis, max_len: int) -> EdgeFeatureMatrix:
    """Per-edge histogram over lengths 3..max_len of basis cycles through the edge.

    Row e, column L-3 counts basis cycles of length L containing edge e;
    cycles longer than ``max_len`` are not counted.
    """
    m = basis.graph.m
    F = np.zeros((m, max(max_len - 2, 0)), dtype=np.int64)
    for cyc in basis.cycles:
        if 3 <= cyc.length <= max_len:
            col = cyc.length - 3
            for i in cyc.edge_indices():
                F[i, col] += 1
    return EdgeFeatureMatrix(F, provenance="scb-histogram")


def _is_single_simple_cycle(g: Graph, bits: int) -> bool:
    degree: dict[int, int] = {}
    for i in range(g.m):
        if (bits >> i) & 1:
            u, v = g.edges[i]
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
    if not degree or any(d != 2 for d in degree.values()):
        return False
    # all degrees are 2: connected iff support is one cycle
    incident: dict[int, list[int]] = {u: [] for u in degree}
    for i in range(g.m):
        if (bits >> i) & 1:
            u, v = g.edges[i]
            incident[u].append(v)
            incident[v].append(u)
    start = next(iter(degree))
    seen = {start}
    dq = deque([start])
    while dq:
        u = dq.popleft()
        for v in incident[u]:
            if v not in seen:
                seen.add(v)
                dq.append(v)
    return len(seen) == len(degree)


def enumerate_simple_cycles(g: Graph) -> list[Z2CycleVector]:
    """All simple cycles of a small graph, by scanning every edge subset.

    Gray-code order keeps the degree bookkeeping O(1) per subset; only
    subsets with all degrees in {0, 2} get the connectivity check.
    """
    if g.m > BRUTE_FORCE_MAX_EDGES:
        raise TooLargeError(f"m={g.m} exceeds exhaustive bound {BRUTE_FORCE_MAX_EDGES}")
    degree = [0] * g.n
    bad = 0  # vertices with degree not in {0, 2}
    cur = 0
    out = []
    for t in range(1, 1 << g.m):
        flip = (t & -t).bit_length() - 1
        u, v = g.edges[flip]
        present = (cur >> flip) & 1
        delta = -1 if present else 1
        for node in (u, v):
            was_ok = degree[node] in (0, 2)
            degree[node] += delta
            if was_ok != (degree[node] in (0, 2)):
                bad += 1 if was_ok else -1
        cur ^= 1 << flip
        if bad == 0 and cur and _is_single_simple_cycle(g, cur):
            out.append(Z2CycleVector(cur, _cycle_weight(g, cur), g.m))
    out.sort(key=Z2CycleVector.sort_key)
    return out


def brute_force_scb(g: Graph) -> CycleBasis:
    """Exhaustive minimum-weight cycle basis; oracle for graphs with m <= 14.

    Greedy over all simple cycles in weight order with GF(2) independence;
    by the matroid exchange property the total weight is minimal.
    """
    cycles = enumerate_simple_cycles(g)
    target = betti_number(g)
    pivots: dict[int, int] = {}
    basis: list[Z2CycleVector] = []
    for cand in cycles:
        cur = cand.bits
        while cur:
            low = cur.bit_length() - 1
            if low not in pivots:
                break
            cur ^= pivots[low]
        if cur:
            pivots[cur.bit_length() - 1] = cur
            basis.append(cand)
            if len(basis) == target:
                break
    if len(basis) != target:
        raise RankDeficientError("simple cycles do not span the cycle space")
    return CycleBasis(g, tuple(basis))


def cycles_to_json_dict(basis: CycleBasis) -> dict:
    """Canonical JSON form: {"g": g, "cycles": [{"edges": [...], "length": L}, ...]}."""
    return {
        "g": basis.g,
        "cycles": [
            {"edges": list(c.edge_indices()), "length": c.length} for c in basis.cycles
        ],
    }


def independent_over_gf2(vectors: Iterable[int]) -> bool:
    """True if the given bitset vectors are linearly independent over GF(2)."""
    pivots: dict[int, int] = {}
    for vec in vectors:
        cur = vec
        while cur:
            low = cur.bit_length() - 1
            if low not in pivots:
                break
            cur ^= pivots[low]
        if not cur:
            return False
        pivots[cur.bit_length() - 1] = cur
    return True
