"""scikit-learn-compatible transformers over graphs.

These wrap the functional core in the estimator protocol (``fit`` /
``transform`` / ``get_params``) so edge-feature extraction composes with
sklearn pipelines operating on collections of graphs. A "sample" is one
graph: either a :class:`~cycleenc.graph.Graph` or a dict with keys
``n``/``edges`` (optionally ``weights``, ``coords``); ``transform``
returns one feature matrix per graph.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .errors import CycleEncError
from .graph import Graph, build_graph
from .hodge import cycle_space_projector, kernel_basis
from .peoi import filter_enhanced_incidence, get_family, peoi_encode
from .scb import cycle_incidence, scb_edge_embedding, shortest_cycle_basis
from .topo import coordinate_filter, sssp_filter

__all__ = ["check_graph", "CycleSpaceProjectorTransformer", "CycleIncidenceEncoder"]


def check_graph(graph) -> Graph:
    """Validation helper: coerce a Graph or a mapping into a valid Graph."""
    if isinstance(graph, Graph):
        # Re-validate: Graph is just a record; upstream code may have built
        # it without going through build_graph.
        return build_graph(
            graph.n, graph.edges, weights=graph.weights,
            coords=graph.coords, labels=graph.labels,
        )
    if isinstance(graph, dict):
        return build_graph(
            int(graph["n"]),
            [tuple(e) for e in graph["edges"]],
            weights=graph.get("weights"),
            coords=graph.get("coords"),
            labels=graph.get("labels"),
        )
    raise CycleEncError(f"cannot interpret {type(graph).__name__} as a graph")


class CycleSpaceProjectorTransformer(BaseEstimator, TransformerMixin):
    """Per-graph cycle-space features from the orthogonal projector.

    Parameters
    ----------
    output : str
        "projector" for the full m x m matrix, "rows" for per-edge rows of
        the projector (equivalent here, kept for pipeline clarity), or
        "kernel-basis" for the m x g orthonormal basis.
    """

    def __init__(self, output: str = "projector"):
        self.output = output

    def fit(self, X, y=None):
        if self.output not in ("projector", "rows", "kernel-basis"):
            raise ValueError(f"unknown output {self.output!r}")
        return self

    def transform(self, X) -> list[np.ndarray]:
        self.fit(X)
        out = []
        for item in X:
            g = check_graph(item)
            if self.output == "kernel-basis":
                out.append(kernel_basis(g).gamma)
            else:
                out.append(cycle_space_projector(g).matrix)
        return out


class CycleIncidenceEncoder(BaseEstimator, TransformerMixin):
    """Per-edge features from the shortest-cycle-basis incidence matrix.

    Parameters
    ----------
    mode : str
        "peoi" (rho-family encoding), "incidence" (raw m x g matrix), or
        "length-hist" (per-edge histogram of basis cycle lengths).
    family : str
        rho family name for mode "peoi".
    filter_spec : str or None
        "sssp:<root>" or "coord:<axis>" scales incidence rows by the edge
        filter before encoding; None encodes the raw matrix.
    max_len : int or None
        Histogram cutoff for mode "length-hist"; defaults to the longest
        basis cycle.
    """

    def __init__(
        self,
        mode: str = "peoi",
        family: str = "counting",
        filter_spec: str | None = None,
        max_len: int | None = None,
    ):
        self.mode = mode
        self.family = family
        self.filter_spec = filter_spec
        self.max_len = max_len

    def fit(self, X, y=None):
        if self.mode not in ("peoi", "incidence", "length-hist"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "peoi":
            get_family(self.family)
        return self

    def _edge_filter(self, g: Graph) -> np.ndarray:
        kind, arg = self.filter_spec.split(":", 1)
        if kind == "sssp":
            return sssp_filter(g, int(arg)).edge_values
        if kind == "coord":
            return coordinate_filter(g, int(arg)).edge_values
        raise ValueError(f"unknown filter_spec {self.filter_spec!r}")

    def transform(self, X) -> list[np.ndarray]:
        self.fit(X)
        out = []
        for item in X:
            g = check_graph(item)
            basis = shortest_cycle_basis(g)
            if self.mode == "length-hist":
                max_len = self.max_len or max(
                    (c.length for c in basis.cycles), default=3
                )
                out.append(scb_edge_embedding(basis, max_len).matrix)
                continue
            M = cycle_incidence(basis).matrix
            if self.mode == "incidence":
                out.append(M)
                continue
            if self.filter_spec:
                M = filter_enhanced_incidence(M, self._edge_filter(g))
            out.append(peoi_encode(M, get_family(self.family)).matrix)
        return out
