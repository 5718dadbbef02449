"""Incidence matrix, graph/edge Laplacians, and the cycle-space projector.

The edge Laplacian ``L1 = B^T B`` acts on edge signals; its kernel is the
real cycle space of the graph. We build an orthonormal kernel basis from
the fundamental cycles of a spanning forest (exact kernel dimension, no
eigenvalue thresholding) and represent the subspace by the orthogonal
projector ``O = Gamma Gamma^T``, which does not depend on the basis
choice.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError
from .graph import Graph, adjacency, component_count

__all__ = [
    "SignedIncidence",
    "KernelBasis",
    "CycleSpaceProjector",
    "incidence_matrix",
    "graph_laplacian",
    "hodge_laplacian",
    "betti_number",
    "spanning_forest",
    "fundamental_cycle_vectors",
    "kernel_basis",
    "cycle_space_projector",
    "hodge_decompose",
    "column_zero_counts",
    "ZERO_TOL",
]

# Threshold below which a projector entry counts as a structural zero.
# For the graphs handled here the true nonzero entries are rationals with
# moderate denominators, orders of magnitude above this.
ZERO_TOL = 1e-9


@dataclass(frozen=True)
class SignedIncidence:
    """Node-by-edge incidence matrix with entries in {-1, 0, +1}.

    Column j has -1 at the tail (min endpoint) and +1 at the head (max
    endpoint) of edge j, so every column sums to zero.
    """

    matrix: np.ndarray  # (n, m) float64


@dataclass(frozen=True)
class KernelBasis:
    """Orthonormal basis of ker(L1): Gamma is m x g with Gamma^T Gamma = I."""

    gamma: np.ndarray  # (m, g) float64
    betti: int


@dataclass(frozen=True)
class CycleSpaceProjector:
    """Orthogonal projector O = Gamma Gamma^T onto the cycle space.

    Symmetric, idempotent, trace equal to the Betti number; identical for
    every orthonormal basis of the kernel.
    """

    matrix: np.ndarray  # (m, m) float64

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix))


def incidence_matrix(g: Graph) -> SignedIncidence:
    B = np.zeros((g.n, g.m))
    for j, (u, v) in enumerate(g.edges):
        B[u, j] = -1.0
        B[v, j] = 1.0
    return SignedIncidence(B)


def graph_laplacian(g: Graph) -> np.ndarray:
    """Node Laplacian ``B B^T``; equals degree matrix minus adjacency."""
    B = incidence_matrix(g).matrix
    return B @ B.T


def hodge_laplacian(g: Graph) -> np.ndarray:
    """Edge Laplacian ``B^T B``; diagonal entries are all 2."""
    B = incidence_matrix(g).matrix
    return B.T @ B


def betti_number(g: Graph) -> int:
    """Dimension of the cycle space: m - n + c over all components."""
    return g.m - g.n + component_count(g)


def spanning_forest(
    g: Graph, rng: np.random.Generator | None = None
) -> tuple[list[int | None], list[int | None], list[int]]:
    """BFS spanning forest as (parent, parent_edge, visit_order).

    Deterministic by default: components are rooted at their lowest node
    id and neighbors visited in ascending order. Passing ``rng`` shuffles
    the visit order, yielding a different (still spanning) forest; used to
    exercise basis invariance.
    """
    parent: list[int | None] = [None] * g.n
    pedge: list[int | None] = [None] * g.n
    seen = [False] * g.n
    order: list[int] = []
    adj = adjacency(g)
    roots = list(range(g.n))
    if rng is not None:
        roots = list(rng.permutation(g.n))
    for root in roots:
        if seen[root]:
            continue
        seen[root] = True
        order.append(root)
        dq = deque([root])
        while dq:
            u = dq.popleft()
            nbrs = adj[u]
            if rng is not None:
                nbrs = [nbrs[i] for i in rng.permutation(len(nbrs))]
            for v, e in nbrs:
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    pedge[v] = e
                    order.append(v)
                    dq.append(v)
    return parent, pedge, order


def fundamental_cycle_vectors(
    g: Graph, rng: np.random.Generator | None = None
) -> np.ndarray:
    """Signed fundamental-cycle vectors, one column per non-forest edge.

    Each non-forest edge (x, y) closes the forest path x..y into a cycle;
    the column holds +-1 per traversed edge (sign + when traversed tail to
    head) and lies in ker(B) by construction. Columns are independent
    because each contains a distinct non-forest edge.
    """
    parent, pedge, _ = spanning_forest(g, rng)
    m = g.m
    tree_edges = {e for e in pedge if e is not None}
    # Signed indicator of the forest path node -> its component root.
    path_up = np.zeros((g.n, m))
    depth = [0] * g.n

    def fill(node: int) -> np.ndarray:
        stack = []
        cur = node
        while parent[cur] is not None and not depth[cur]:
            stack.append(cur)
            cur = parent[cur]
        for x in reversed(stack):
            p = parent[x]
            e = pedge[x]
            assert p is not None and e is not None
            vec = path_up[p].copy()
            u, v = g.edges[e]
            vec[e] += 1.0 if (x, p) == (u, v) else -1.0
            path_up[x] = vec
            depth[x] = depth[p] + 1
        return path_up[node]

    cols = []
    for e, (x, y) in enumerate(g.edges):
        if e in tree_edges:
            continue
        vec = fill(x) - fill(y)  # signed forest path x -> y
        u, v = g.edges[e]
        vec[e] += 1.0 if (y, x) == (u, v) else -1.0  # close the loop y -> x
        cols.append(vec)
    if not cols:
        return np.zeros((m, 0))
    return np.array(cols).T


def _orthonormalize(A: np.ndarray) -> np.ndarray:
    """Modified Gram-Schmidt with a second pass for near-machine orthogonality."""
    Q = A.astype(float).copy()
    for _ in range(2):
        for j in range(Q.shape[1]):
            for i in range(j):
                Q[:, j] -= (Q[:, i] @ Q[:, j]) * Q[:, i]
            Q[:, j] /= np.linalg.norm(Q[:, j])
    return Q


def kernel_basis(g: Graph, rng: np.random.Generator | None = None) -> KernelBasis:
    """Orthonormal cycle-space basis from spanning-forest fundamental cycles.

    Deterministic given the graph; ``rng`` varies the spanning forest
    (the resulting projector must not change).
    """
    betti = betti_number(g)
    if betti == 0:
        return KernelBasis(np.zeros((g.m, 0)), 0)
    A = fundamental_cycle_vectors(g, rng)
    return KernelBasis(_orthonormalize(A), betti)


def cycle_space_projector(g: Graph, rng: np.random.Generator | None = None) -> CycleSpaceProjector:
    kb = kernel_basis(g, rng)
    return CycleSpaceProjector(kb.gamma @ kb.gamma.T)


def hodge_decompose(g: Graph, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split an edge signal into harmonic (cycle) and gradient parts.

    Returns ``(O x, x - O x)``: the orthogonal decomposition of R^m into
    ker(L1) and Im(B^T).
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (g.m,):
        raise DimensionMismatchError(f"expected vector of length m={g.m}, got {x.shape}")
    O = cycle_space_projector(g).matrix
    harmonic = O @ x
    return harmonic, x - harmonic


def column_zero_counts(O: np.ndarray, tol: float = ZERO_TOL) -> list[int]:
    """Per-column count of entries with |entry| < tol."""
    return [int(np.sum(np.abs(O[:, j]) < tol)) for j in range(O.shape[1])]
