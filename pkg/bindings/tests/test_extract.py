"""Client tests, including byte-parity with the CLI's own NPY output.

Graph data is inlined rather than imported from the primary library: the
client's contract is the CLI surface, not the Python API.
"""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from cycleenc_client import (
    ComputationError,
    FeatureRequest,
    UsageError,
    ValidationError,
    extract,
)

TRI_EDGE_EDGES = ((0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (3, 4), (4, 5), (3, 6), (4, 6))


def rook_edges() -> tuple[tuple[int, int], ...]:
    return tuple(
        (i, j)
        for i in range(16)
        for j in range(i + 1, 16)
        if i // 4 == j // 4 or i % 4 == j % 4
    )


def run_cli_features(tmp_path: Path, graph_doc: dict, *flags: str) -> bytes:
    graph = tmp_path / "g.json"
    out = tmp_path / "cli_out.npy"
    graph.write_text(json.dumps(graph_doc, sort_keys=True, separators=(",", ":")) + "\n")
    argv = [
        "cycleenc", "features", "--graph", str(graph), "--format", "npy",
        "--out", str(out), *flags,
    ]
    proc = subprocess.run(argv, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return out.read_bytes()


class TestRookProjector:
    def test_shape_and_trace(self):
        arr, meta = extract(FeatureRequest(n=16, edges=rook_edges(), mode="projector"))
        assert arr.shape == (48, 48)
        assert abs(np.trace(arr) - 33.0) < 1e-8
        assert meta["mode"] == "projector"
        assert meta["betti"] == 33

    def test_byte_parity_with_cli(self, tmp_path):
        arr, meta = extract(FeatureRequest(n=16, edges=rook_edges(), mode="projector"))
        cli_bytes = run_cli_features(
            tmp_path,
            {"version": 1, "n": 16, "edges": [list(e) for e in rook_edges()]},
            "--mode", "projector",
        )
        assert meta["npy_bytes"] == cli_bytes
        assert arr.tobytes() == cli_bytes[-arr.nbytes:]


class TestFixturePeoi:
    def test_counting_column(self):
        arr, meta = extract(
            FeatureRequest(n=7, edges=TRI_EDGE_EDGES, mode="peoi", family="counting")
        )
        assert arr[:, 0].tolist() == [4, 4, 2, 6, 4, 4, 4, 2, 2]
        assert meta["g"] == 3

    def test_byte_parity_with_cli(self, tmp_path):
        arr, meta = extract(
            FeatureRequest(n=7, edges=TRI_EDGE_EDGES, mode="peoi", family="counting")
        )
        cli_bytes = run_cli_features(
            tmp_path,
            {"version": 1, "n": 7, "edges": [list(e) for e in TRI_EDGE_EDGES]},
            "--mode", "peoi", "--family", "counting",
        )
        assert meta["npy_bytes"] == cli_bytes

    def test_filtered_epd_min(self):
        arr, _ = extract(
            FeatureRequest(
                n=7, edges=TRI_EDGE_EDGES, mode="peoi", family="epd_min", filter_spec="sssp:0"
            )
        )
        assert arr[:, 0].tolist() == [4.0, 4.0, 4.0, 10.0, 6.0, 10.0, 6.0, 6.0, 6.0]


class TestScbModes:
    def test_incidence_uint8(self):
        arr, meta = extract(FeatureRequest(n=7, edges=TRI_EDGE_EDGES, mode="scb"))
        assert arr.dtype == np.uint8 and arr.shape == (9, 3)
        assert sorted(arr.sum(axis=0).tolist()) == [3, 3, 5]

    def test_edge_hist(self):
        arr, _ = extract(FeatureRequest(n=7, edges=TRI_EDGE_EDGES, mode="scb-edge-hist"))
        assert arr.shape == (9, 3)


class TestValidation:
    def test_self_loop_rejected_before_dispatch(self, monkeypatch):
        # dispatch must not happen: poison the CLI resolution
        monkeypatch.setenv("CYCLEENC_CLI", "/nonexistent/cycleenc")
        with pytest.raises(ValidationError):
            extract(FeatureRequest(n=2, edges=((0, 0),), mode="projector"))

    def test_duplicate_edge(self):
        with pytest.raises(ValidationError):
            extract(FeatureRequest(n=3, edges=((0, 1), (1, 0)), mode="projector"))

    def test_out_of_range(self):
        with pytest.raises(ValidationError):
            extract(FeatureRequest(n=2, edges=((0, 5),), mode="projector"))

    def test_peoi_needs_family(self):
        with pytest.raises(ValidationError):
            extract(FeatureRequest(n=3, edges=((0, 1),), mode="peoi"))

    def test_epd_min_needs_filter(self):
        with pytest.raises(ValidationError):
            extract(
                FeatureRequest(n=3, edges=((0, 1),), mode="peoi", family="epd_min")
            )

    def test_bad_filter_spec(self):
        with pytest.raises(ValidationError):
            extract(
                FeatureRequest(
                    n=3, edges=((0, 1),), mode="peoi", family="counting",
                    filter_spec="warp",
                )
            )

    def test_unknown_mode(self):
        with pytest.raises(ValidationError):
            extract(FeatureRequest(n=3, edges=((0, 1),), mode="warp"))


class TestCliFailuresSurface:
    def test_unknown_family_maps_to_usage_error(self):
        with pytest.raises(UsageError) as exc:
            extract(FeatureRequest(n=7, edges=TRI_EDGE_EDGES, mode="peoi", family="warp"))
        assert "warp" in str(exc.value)

    def test_unreachable_filter_root_maps_to_computation_error(self):
        disconnected = ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5))
        with pytest.raises(ComputationError):
            extract(
                FeatureRequest(
                    n=6, edges=disconnected, mode="peoi", family="epd_min",
                    filter_spec="sssp:0",
                )
            )

    def test_missing_binary_is_computation_error(self, monkeypatch):
        monkeypatch.setenv("CYCLEENC_CLI", "/nonexistent/cycleenc")
        with pytest.raises(ComputationError):
            extract(FeatureRequest(n=3, edges=((0, 1),), mode="projector"))
