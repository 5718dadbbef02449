"""Graph-pair distinguishability: WL refinements and encoder digests.

An encoder digest reduces a named encoding to a canonical byte string
that is invariant under graph relabeling (rows become sorted multisets,
reals are rounded at 1e-8, entries of the projector are compared by
magnitude since edge orientation flips signs). Two graphs are
"Distinguished" by an encoder exactly when their digests differ.

WL convention: ``wl1`` is classic color refinement on nodes; ``fwl2`` is
folklore 2-WL on ordered node pairs, which has the distinguishing power
of (oblivious) 3-WL. Claims phrased against "k-WL" elsewhere should be
read with that one-step offset in mind.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

import numpy as np

from .errors import TooLargeError, UnknownEncoderError
from .graph import Graph, adjacency
from .hodge import ZERO_TOL, column_zero_counts, cycle_space_projector
from .peoi import filter_enhanced_incidence, get_family, peoi_encode
from .scb import cycle_incidence, scb_edge_embedding, scb_length_histogram, shortest_cycle_basis
from .topo import coordinate_filter, cycle_epd, sssp_filter

__all__ = [
    "WLColoring",
    "ComparisonVerdict",
    "wl1_refine",
    "fwl2_refine",
    "encoder_digest",
    "compare",
    "ENCODER_NAMES",
]

ROUND_SCALE = 1e8

ENCODER_NAMES = (
    "projector-zeros",
    "projector-rows",
    "scb-lengths",
    "scb-edge-hist",
    "peoi:<family>[:sssp:<root>|:coord:<axis>]",
    "epd:sssp:<root>|epd:sssp:all|epd:coord:<axis>",
    "wl1",
    "fwl2",
)


@dataclass(frozen=True)
class WLColoring:
    """Stable refinement colors plus their canonical histogram.

    ``colors`` are per-element integer ids assigned by sorted order of the
    underlying signature strings, so they do not depend on node order;
    ``histogram`` maps signature hash -> count and is the comparable part.
    """

    colors: tuple[int, ...]
    histogram: dict[str, int]
    rounds: int


@dataclass(frozen=True)
class ComparisonVerdict:
    encoder: str
    result: str  # "Distinguished" | "Indistinguishable"
    digest_a: bytes
    digest_b: bytes

    @property
    def distinguished(self) -> bool:
        return self.result == "Distinguished"

    def to_json_dict(self) -> dict:
        return {
            "encoder": self.encoder,
            "result": self.result,
            "digest_a_sha": hashlib.sha256(self.digest_a).hexdigest(),
            "digest_b_sha": hashlib.sha256(self.digest_b).hexdigest(),
        }


def _sha(s: str) -> str:
    return hashlib.sha256(s.encode("utf-8")).hexdigest()


def _partition_ids(colors: list[str]) -> tuple[int, ...]:
    first: dict[str, int] = {}
    return tuple(first.setdefault(c, len(first)) for c in colors)


def _coloring(colors: list[str], rounds: int) -> WLColoring:
    ranked = {c: i for i, c in enumerate(sorted(set(colors)))}
    hist: dict[str, int] = {}
    for c in colors:
        hist[c] = hist.get(c, 0) + 1
    return WLColoring(tuple(ranked[c] for c in colors), hist, rounds)


def wl1_refine(g: Graph) -> WLColoring:
    """Classic color refinement from uniform initial colors to a fixed point.

    Colors are hashes of the full signature history, so equal multisets
    across two graphs mean the refinement cannot separate them.
    """
    adj = adjacency(g)
    colors = ["0"] * g.n
    prev_part = _partition_ids(colors)
    rounds = 0
    for _ in range(g.n + 1):
        new = [
            _sha(colors[v] + "|" + ",".join(sorted(colors[u] for u, _ in adj[v])))
            for v in range(g.n)
        ]
        rounds += 1
        new_part = _partition_ids(new)
        colors = new
        if new_part == prev_part:
            break
        prev_part = new_part
    return _coloring(colors, rounds)


FWL2_MAX_NODES = 64


def fwl2_refine(g: Graph) -> WLColoring:
    """Folklore 2-WL on ordered node pairs (3-WL power); O(n^3) per round.

    Pair (u, v) starts from its atomic type (equal / edge / non-edge) and
    is refined by the multiset over w of (color(u, w), color(w, v)).
    """
    n = g.n
    if n > FWL2_MAX_NODES:
        raise TooLargeError(f"n={n} exceeds folklore-2-WL bound {FWL2_MAX_NODES}")
    edge_set = set(g.edges)

    def atomic(u: int, v: int) -> str:
        if u == v:
            return "s"
        return "e" if (min(u, v), max(u, v)) in edge_set else "n"

    colors = [atomic(u, v) for u in range(n) for v in range(n)]
    prev_part = _partition_ids(colors)
    rounds = 0
    for _ in range(n * n + 1):
        new = []
        for u in range(n):
            for v in range(n):
                sig = sorted(
                    colors[u * n + w] + "*" + colors[w * n + v] for w in range(n)
                )
                new.append(_sha(colors[u * n + v] + "|" + ",".join(sig)))
        rounds += 1
        new_part = _partition_ids(new)
        colors = new
        if new_part == prev_part:
            break
        prev_part = new_part
    return _coloring(colors, rounds)


# ---------------------------------------------------------------------------
# Encoder digests
# ---------------------------------------------------------------------------


def _round_real(x: float) -> int:
    return int(round(x * ROUND_SCALE))


def _payload_bytes(encoder: str, payload) -> bytes:
    doc = {"encoder": encoder, "payload": payload}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")).encode("utf-8")


def _rows_multiset(F: np.ndarray) -> list[list[int]]:
    if np.issubdtype(F.dtype, np.integer):
        rows = [[int(x) for x in row] for row in F]
    else:
        rows = [[_round_real(float(x)) for x in row] for row in F]
    return sorted(rows)


def _histogram_payload(hist: dict[str, int]) -> list[list]:
    return [[k, v] for k, v in sorted(hist.items())]


def _parse_filter(g: Graph, spec: str):
    if spec.startswith("sssp:"):
        arg = spec.split(":", 1)[1]
        if arg == "all":
            return ("sssp-all", None)
        return ("sssp", sssp_filter(g, int(arg)))
    if spec.startswith("coord:"):
        return ("coord", coordinate_filter(g, int(spec.split(":", 1)[1])))
    raise UnknownEncoderError(f"unknown filter spec {spec!r}")


def _epd_payload(g: Graph, basis, spec: str):
    kind, f = _parse_filter(g, spec)
    if kind == "sssp-all":
        per_root = []
        for root in range(g.n):
            pairs = cycle_epd(basis, sssp_filter(g, root))
            per_root.append(sorted([_round_real(p.hi), _round_real(p.lo)] for p in pairs))
        return sorted(per_root)
    pairs = cycle_epd(basis, f)
    return sorted([_round_real(p.hi), _round_real(p.lo)] for p in pairs)


def encoder_digest(g: Graph, encoder: str) -> bytes:
    """Canonical, relabeling-invariant byte digest of the named encoding.

    Note: SCB-derived encoders (scb-edge-hist, peoi) are canonical per
    graph only up to shortest-cycle-basis uniqueness; their digests are
    relabeling-invariant whenever the SCB is unique.
    """
    if encoder == "projector-zeros":
        O = cycle_space_projector(g).matrix
        return _payload_bytes(encoder, sorted(column_zero_counts(O, ZERO_TOL)))
    if encoder == "projector-rows":
        O = cycle_space_projector(g).matrix
        rows = sorted(sorted(_round_real(abs(x)) for x in row) for row in O)
        return _payload_bytes(encoder, rows)
    if encoder == "wl1":
        return _payload_bytes(encoder, _histogram_payload(wl1_refine(g).histogram))
    if encoder == "fwl2":
        return _payload_bytes(encoder, _histogram_payload(fwl2_refine(g).histogram))
    if encoder == "scb-lengths":
        hist = scb_length_histogram(shortest_cycle_basis(g))
        return _payload_bytes(encoder, [[k, v] for k, v in sorted(hist.items())])
    if encoder == "scb-edge-hist":
        basis = shortest_cycle_basis(g)
        max_len = max((c.length for c in basis.cycles), default=3)
        F = scb_edge_embedding(basis, max_len).matrix
        sparse_rows = sorted(
            [[L + 3, int(c)] for L, c in enumerate(row) if c] for row in F
        )
        return _payload_bytes(encoder, sparse_rows)
    if encoder.startswith("epd:"):
        basis = shortest_cycle_basis(g)
        return _payload_bytes(encoder, _epd_payload(g, basis, encoder[4:]))
    if encoder.startswith("peoi:"):
        parts = encoder.split(":")
        family = get_family(parts[1])
        basis = shortest_cycle_basis(g)
        X = cycle_incidence(basis).matrix
        if len(parts) > 2 and parts[2] != "none":
            kind, f = _parse_filter(g, ":".join(parts[2:]))
            if kind == "sssp-all":
                raise UnknownEncoderError("peoi requires a single-root or coord filter")
            X = filter_enhanced_incidence(X, f.edge_values)
        F = peoi_encode(X, family).matrix
        return _payload_bytes(encoder, _rows_multiset(F))
    raise UnknownEncoderError(f"unknown encoder {encoder!r}")


def compare(a: Graph, b: Graph, encoder: str) -> ComparisonVerdict:
    """Digest-equality comparison of two graphs under one encoder."""
    da = encoder_digest(a, encoder)
    db = encoder_digest(b, encoder)
    result = "Distinguished" if da != db else "Indistinguishable"
    return ComparisonVerdict(encoder, result, da, db)
