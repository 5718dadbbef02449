"""Byte-stable writers for feature matrices: NPY v1.0, CSV, and JSON.

NPY files are always written as format version 1.0 (magic ``\\x93NUMPY``),
little-endian, C-order, so identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from numpy.lib import format as npy_format

from .graph import Graph

__all__ = ["write_npy", "write_csv", "write_json_matrix", "write_metadata"]


def write_npy(path: str | Path, array: np.ndarray) -> None:
    arr = np.ascontiguousarray(array)
    if arr.dtype == np.float64:
        arr = arr.astype("<f8")
    elif arr.dtype != np.uint8:
        arr = arr.astype("<f8")
    with open(path, "wb") as fh:
        npy_format.write_array(fh, arr, version=(1, 0))


def write_csv(path: str | Path, g: Graph, F: np.ndarray) -> None:
    """Per-edge rows as ``edge_index,u,v,f0..f{d-1}``."""
    d = F.shape[1]
    header = "edge_index,u,v," + ",".join(f"f{i}" for i in range(d))
    lines = [header]
    integral = np.issubdtype(F.dtype, np.integer)
    for j, (u, v) in enumerate(g.edges):
        vals = (
            ",".join(str(int(x)) for x in F[j])
            if integral
            else ",".join(repr(float(x)) for x in F[j])
        )
        lines.append(f"{j},{u},{v},{vals}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_json_matrix(path: str | Path, array: np.ndarray) -> None:
    """Array-of-arrays JSON; floats via repr for round-trip fidelity."""
    if np.issubdtype(array.dtype, np.integer):
        rows = [[int(x) for x in row] for row in array]
    else:
        rows = [[float(x) for x in row] for row in array]
    Path(path).write_text(
        json.dumps(rows, separators=(",", ":")) + "\n", encoding="utf-8"
    )


def write_metadata(path: str | Path, meta: dict) -> None:
    Path(path).write_text(
        json.dumps(meta, sort_keys=True, separators=(",", ":")) + "\n", encoding="utf-8"
    )
