"""Row-equivariant, column-order-invariant encodings of cycle incidence matrices.

Row i of the encoding is

    rho3( sum_k rho2( X[i][k], sum_{j != i} rho1(X[i][k], X[j][k]) ) )

which is equivariant under row permutations and invariant under column
permutations by construction. The closed-form rho families below are
exact (integer arithmetic for integer inputs); float inputs accumulate in
a fixed order (ascending j, then ascending k) so outputs are reproducible
and column reordering moves results by at most ~1e-15 relative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DimensionMismatchError, UnknownFamilyError

__all__ = [
    "EdgeFeatureMatrix",
    "RhoFamily",
    "peoi_encode",
    "min_mlp",
    "filter_enhanced_incidence",
    "family_counting",
    "family_counting_general",
    "family_cycle_count",
    "family_epd_min",
    "get_family",
    "register_family",
    "FAMILY_NAMES",
]


@dataclass(frozen=True)
class EdgeFeatureMatrix:
    """Per-edge feature rows (m x d) plus a provenance tag."""

    matrix: np.ndarray
    provenance: str

    @property
    def m(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def d(self) -> int:
        return int(self.matrix.shape[1])


@dataclass(frozen=True)
class RhoFamily:
    """The (rho1, rho2, rho3) triple driving the encoding.

    All three callables must be numpy-vectorized (broadcasting). rho1 maps
    a pair of entries to R^a, rho2 maps (entry, inner sum) to R^b, rho3
    maps the accumulated R^b to R^d; scalar outputs mean dim 1. With
    ``drop_final_xik`` the entry argument of rho2 is withheld (passed as
    None), the memory-light form. ``include_self`` adds the j == i term
    to the inner sum. ``integer`` selects exact int64 arithmetic when the
    input matrix is integral.
    """

    name: str
    rho1: Callable
    rho2: Callable
    rho3: Callable
    dims: tuple[int, int, int] = (1, 1, 1)
    drop_final_xik: bool = False
    include_self: bool = False
    integer: bool = False


def _as_matrix(X) -> np.ndarray:
    X = getattr(X, "matrix", X)
    return np.asarray(X)


def _check_trailing(arr: np.ndarray, lead: tuple[int, ...], dim: int, what: str) -> np.ndarray:
    """Normalize rho output to shape lead + (dim,), validating declared dims."""
    arr = np.asarray(arr)
    if dim == 1 and arr.shape == lead:
        return arr[..., None]
    if arr.shape == lead + (dim,):
        return arr
    raise DimensionMismatchError(
        f"{what} produced shape {arr.shape}, expected {lead + (dim,)} (or {lead} for dim 1)"
    )


def peoi_encode(X, fam: RhoFamily) -> EdgeFeatureMatrix:
    """Encode an m x g (cycle incidence or filter-enhanced) matrix row-wise.

    Accepts a raw array or any object with a ``matrix`` attribute. An
    empty matrix (g = 0) encodes every row as rho3 of zeros.
    """
    M = _as_matrix(X)
    if M.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-d matrix, got shape {M.shape}")
    m, g = M.shape
    a, b, d = fam.dims
    exact = fam.integer and np.issubdtype(M.dtype, np.integer)
    work = M.astype(np.int64 if exact else np.float64)
    acc = np.zeros((m, b), dtype=work.dtype)
    for k in range(g):
        col = work[:, k]
        pair = _check_trailing(fam.rho1(col[:, None], col[None, :]), (m, m), a, "rho1")
        inner = pair.sum(axis=1)  # (m, a); ascending-j accumulation
        if not fam.include_self:
            inner = inner - _check_trailing(fam.rho1(col, col), (m,), a, "rho1")
        if fam.drop_final_xik:
            term = fam.rho2(None, inner if a > 1 else inner[:, 0])
        else:
            term = fam.rho2(col, inner if a > 1 else inner[:, 0])
        acc += _check_trailing(term, (m,), b, "rho2")
    out = _check_trailing(fam.rho3(acc if b > 1 else acc[:, 0]), (m,), d, "rho3")
    return EdgeFeatureMatrix(out, provenance=f"peoi:{fam.name}")


def min_mlp(x, y):
    """Exact elementwise minimum via a fixed two-layer ReLU network.

    Hidden weights (1,1), (1,-1), (-1,1), (-1,-1) with zero bias; output
    weights (0.5, -0.5, -0.5, -0.5). Algebraically this is
    0.5*((x+y) - |x-y|) = min(x, y); exact whenever x+y and x-y round
    exactly (in particular for all integer-valued inputs below 2**52),
    and within a few ulps of |x|+|y| otherwise.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    h1 = np.maximum(x + y, 0.0)
    h2 = np.maximum(x - y, 0.0)
    h3 = np.maximum(y - x, 0.0)
    h4 = np.maximum(-x - y, 0.0)
    return 0.5 * h1 - 0.5 * h2 - 0.5 * h3 - 0.5 * h4


def filter_enhanced_incidence(X, edge_filter) -> np.ndarray:
    """Scale row i of the incidence matrix by edge_filter[i]."""
    M = _as_matrix(X).astype(np.float64)
    f = np.asarray(edge_filter, dtype=np.float64)
    if f.shape != (M.shape[0],):
        raise DimensionMismatchError(
            f"edge filter has shape {f.shape}, expected ({M.shape[0]},)"
        )
    return f[:, None] * M


def family_counting() -> RhoFamily:
    """Integer family separating incidence rows that plain cycle counts cannot.

    rho1(x, y) = 2x + y; rho2(_, Y) = max(Y - 16, 0); rho3 identity. The
    threshold 16 encodes 2*(m-1) for m = 9 edges and is kept verbatim; use
    :func:`family_counting_general` for other sizes.
    """
    return RhoFamily(
        name="counting",
        rho1=lambda x, y: 2 * x + y,
        rho2=lambda x, Y: np.maximum(Y - 16, 0),
        rho3=lambda Y: Y,
        integer=True,
    )


def family_counting_general(m: int) -> RhoFamily:
    """Counting family with the threshold generalized to 2*(m-1)."""
    thresh = 2 * (m - 1)
    return RhoFamily(
        name=f"counting_general[{m}]",
        rho1=lambda x, y: 2 * x + y,
        rho2=lambda x, Y: np.maximum(Y - thresh, 0),
        rho3=lambda Y: Y,
        integer=True,
    )


def family_cycle_count() -> RhoFamily:
    """Constant rho1; every output row equals g*(m-1), recovering the cycle count."""
    return RhoFamily(
        name="cycle_count",
        rho1=lambda x, y: x * 0 + y * 0 + 1,
        rho2=lambda x, Y: Y,
        rho3=lambda Y: Y,
        integer=True,
    )


def family_epd_min() -> RhoFamily:
    """Minimum-extracting family for filter-enhanced incidence matrices.

    rho1 is the exact min MLP, rho2 passes the inner sum through, rho3 is
    the identity.
    """
    return RhoFamily(
        name="epd_min",
        rho1=min_mlp,
        rho2=lambda x, Y: Y,
        rho3=lambda Y: Y,
    )


_FAMILY_FACTORIES: dict[str, Callable[..., RhoFamily]] = {
    "counting": family_counting,
    "counting_general": family_counting_general,
    "cycle_count": family_cycle_count,
    "epd_min": family_epd_min,
}

FAMILY_NAMES = tuple(_FAMILY_FACTORIES)


def register_family(name: str, factory: Callable[..., RhoFamily]) -> None:
    """Add a user-defined rho family to the registry."""
    _FAMILY_FACTORIES[name] = factory


def get_family(name: str, **kwargs) -> RhoFamily:
    try:
        factory = _FAMILY_FACTORIES[name]
    except KeyError:
        raise UnknownFamilyError(
            f"unknown family {name!r}; known: {sorted(_FAMILY_FACTORIES)}"
        ) from None
    return factory(**kwargs)
