"""Subprocess-backed feature extraction for GNN data loaders.

``extract`` turns a :class:`FeatureRequest` into an in-memory float64 (or
uint8) array by invoking the ``cycleenc`` CLI over temp files and decoding
the NPY payload it writes. The array bytes are exactly the CLI's NPY
payload for the same request; nothing is recomputed on this side.

The CLI binary is resolved from the ``CYCLEENC_CLI`` environment variable
when set (whitespace-split into argv), else ``cycleenc`` on PATH.
"""

from __future__ import annotations

import ast
import json
import os
import subprocess
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

__all__ = [
    "ClientError",
    "ValidationError",
    "UsageError",
    "ComputationError",
    "FeatureRequest",
    "extract",
]

SCHEMA_VERSION = 1


class ClientError(Exception):
    """Base class for extraction failures."""


class ValidationError(ClientError):
    """Request rejected before dispatch (mirrors CLI exit code 2 causes)."""


class UsageError(ClientError):
    """CLI rejected the request (exit code 2)."""


class ComputationError(ClientError):
    """CLI failed while computing (exit code 3, or unexpected exit)."""


@dataclass(frozen=True)
class FeatureRequest:
    """Graph data plus the feature mode, mirroring ``cycleenc features`` flags.

    mode: "projector", "kernel-basis", "scb", "peoi", or "scb-edge-hist".
    filter_spec: "sssp:<root>", "coord:<axis>", or None.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[float, ...] | None = None
    coords: tuple[tuple[float, ...], ...] | None = None
    mode: str = "projector"
    family: str | None = None
    filter_spec: str | None = None
    max_len: int | None = None

    _MODES = ("projector", "kernel-basis", "scb", "peoi", "scb-edge-hist")

    def validate(self) -> None:
        if self.mode not in self._MODES:
            raise ValidationError(f"unknown mode {self.mode!r}; known: {self._MODES}")
        if self.mode == "peoi" and not self.family:
            raise ValidationError("mode 'peoi' requires a family")
        if self.family == "epd_min" and not self.filter_spec:
            raise ValidationError("family 'epd_min' requires a filter_spec")
        if self.n < 0:
            raise ValidationError(f"negative node count {self.n}")
        seen: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValidationError(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise ValidationError(f"self-loop at node {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValidationError(f"duplicate edge {key}")
            seen.add(key)
        if self.weights is not None:
            if len(self.weights) != len(self.edges):
                raise ValidationError("weights length does not match edge count")
            if any(not w > 0 for w in self.weights):
                raise ValidationError("weights must be positive")
        if self.coords is not None and len(self.coords) != self.n:
            raise ValidationError("coords length does not match node count")
        if self.filter_spec is not None:
            kind, _, arg = self.filter_spec.partition(":")
            if kind not in ("sssp", "coord") or not arg.lstrip("-").isdigit():
                raise ValidationError(f"bad filter_spec {self.filter_spec!r}")

    def graph_document(self) -> dict:
        doc: dict = {
            "version": SCHEMA_VERSION,
            "n": self.n,
            "edges": [[int(u), int(v)] for u, v in self.edges],
        }
        if self.weights is not None:
            doc["weights"] = [float(w) for w in self.weights]
        if self.coords is not None:
            doc["coords"] = [[float(x) for x in row] for row in self.coords]
        return doc


def _cli_argv() -> list[str]:
    override = os.environ.get("CYCLEENC_CLI")
    if override:
        return override.split()
    return ["cycleenc"]


def decode_npy(payload: bytes) -> np.ndarray:
    """Decode an NPY v1.x byte string (little-endian f8 or u1, C order)."""
    if payload[:6] != b"\x93NUMPY":
        raise ComputationError("output is not an NPY file")
    header_len = int.from_bytes(payload[8:10], "little")
    header = ast.literal_eval(payload[10 : 10 + header_len].decode("latin1"))
    if header["fortran_order"]:
        raise ComputationError("unexpected Fortran-order NPY output")
    dtype = np.dtype(header["descr"])
    data = payload[10 + header_len :]
    return np.frombuffer(data, dtype=dtype).reshape(header["shape"])


def extract(request: FeatureRequest) -> tuple[np.ndarray, dict]:
    """Run the request through the CLI; return (array, metadata).

    Metadata carries the CLI sidecar fields (mode, shape, dtype, betti,
    and g where applicable) plus ``npy_bytes``, the verbatim NPY payload.
    Raises :class:`UsageError` / :class:`ComputationError` with the
    captured stderr on nonzero CLI exit.
    """
    request.validate()
    with tempfile.TemporaryDirectory(prefix="cycleenc-client-") as tmp:
        graph_path = Path(tmp) / "graph.json"
        out_path = Path(tmp) / "features.npy"
        graph_path.write_text(
            json.dumps(request.graph_document(), sort_keys=True, separators=(",", ":"))
            + "\n",
            encoding="utf-8",
        )
        argv = _cli_argv() + [
            "features",
            "--graph", str(graph_path),
            "--mode", request.mode,
            "--format", "npy",
            "--out", str(out_path),
        ]
        if request.family:
            argv += ["--family", request.family]
        if request.filter_spec:
            argv += ["--filter", request.filter_spec]
        if request.max_len is not None:
            argv += ["--max-len", str(request.max_len)]
        try:
            proc = subprocess.run(argv, capture_output=True, text=True)
        except OSError as exc:
            raise ComputationError(f"cannot launch {argv[0]!r}: {exc}") from exc
        if proc.returncode == 2:
            raise UsageError(proc.stderr.strip() or proc.stdout.strip())
        if proc.returncode != 0:
            raise ComputationError(
                f"exit {proc.returncode}: {proc.stderr.strip() or proc.stdout.strip()}"
            )
        payload = out_path.read_bytes()
        metadata = json.loads((Path(tmp) / "features.npy.meta.json").read_text())
        metadata["npy_bytes"] = payload
        return decode_npy(payload), metadata
