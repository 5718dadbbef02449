"""Shared test helpers: seeded random graphs and independent oracles.

The oracles here deliberately re-derive quantities from first principles
(plain union-find, GF(2) Gaussian elimination, exhaustive counting) so
they stay independent of the library code paths they check.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from cycleenc import Graph, build_graph


def random_graph(seed: int, n_max: int = 12, m_max: int = 14, weighted: bool = False) -> Graph:
    """Seeded random simple graph with n <= n_max, m <= m_max."""
    rng = np.random.Generator(np.random.PCG64(seed))
    n = int(rng.integers(3, n_max + 1))
    all_pairs = list(itertools.combinations(range(n), 2))
    m = int(rng.integers(1, min(m_max, len(all_pairs)) + 1))
    picked = rng.choice(len(all_pairs), size=m, replace=False)
    edges = [all_pairs[i] for i in sorted(picked)]
    weights = None
    if weighted:
        weights = [float(w) for w in rng.integers(1, 6, size=m)]
    return build_graph(n, edges, weights=weights)


def relabel_nodes(g: Graph, rng: np.random.Generator, fix: tuple[int, ...] = ()) -> Graph:
    """Random node relabeling; isomorphic to g by construction.

    Nodes listed in ``fix`` keep their ids (for root-anchored encoders).
    """
    movable = [i for i in range(g.n) if i not in fix]
    shuffled = [movable[i] for i in rng.permutation(len(movable))]
    perm = np.arange(g.n)
    perm[movable] = shuffled
    edges = [(int(perm[u]), int(perm[v])) for u, v in g.edges]
    order = rng.permutation(g.m)
    edges = [edges[i] for i in order]
    weights = None
    if g.weights is not None:
        weights = [g.weights[i] for i in order]
    coords = None
    if g.coords is not None:
        inv = np.argsort(perm)
        coords = [g.coords[int(inv[i])] for i in range(g.n)]
    return build_graph(g.n, edges, weights=weights, coords=coords)


def oracle_component_count(n: int, edges) -> int:
    """Independent union-find (by size, no path halving)."""
    parent = list(range(n))
    size = [1] * n

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
    return len({find(i) for i in range(n)})


def oracle_gf2_rank(vectors: list[int]) -> int:
    """Rank of bitset vectors over GF(2) by Gaussian elimination."""
    basis: list[int] = []
    for vec in vectors:
        cur = vec
        for b in basis:
            cur = min(cur, cur ^ b)
        if cur:
            basis.append(cur)
            basis.sort(reverse=True)
    return len(basis)


def oracle_matrix_rank(M: np.ndarray, tol: float = 1e-9) -> int:
    """Real rank by hand-rolled Gaussian elimination with partial pivoting."""
    A = M.astype(float).copy()
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        if rank >= rows:
            break
        pivot = rank + int(np.argmax(np.abs(A[rank:, c])))
        if abs(A[pivot, c]) < tol:
            continue
        A[[rank, pivot]] = A[[pivot, rank]]
        A[rank] /= A[rank, c]
        for r in range(rows):
            if r != rank and abs(A[r, c]) > tol:
                A[r] -= A[r, c] * A[rank]
        rank += 1
    return rank


@pytest.fixture(scope="session")
def rook():
    from cycleenc import gen_rook4x4

    return gen_rook4x4()


@pytest.fixture(scope="session")
def shrikhande():
    from cycleenc import gen_shrikhande

    return gen_shrikhande()


@pytest.fixture(scope="session")
def tri_edge():
    from cycleenc import fixture_graph

    return fixture_graph("triangles_shared_edge")


@pytest.fixture(scope="session")
def tri_vertex():
    from cycleenc import fixture_graph

    return fixture_graph("triangles_shared_vertex")


def triangle() -> Graph:
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


def path_graph(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])
