"""Packaged reference graphs.

``triangles_shared_edge`` and ``triangles_shared_vertex`` are the 7-node,
9-edge pair whose shortest cycle bases have identical length histograms
{3: 2, 5: 1} yet whose cycle incidence matrices encode differently: two
triangles hang off a 5-cycle, sharing an edge in one graph and only a
vertex in the other.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .graph import Graph, load_graph

__all__ = ["FIXTURE_NAMES", "fixture_path", "fixture_graph"]

FIXTURE_NAMES = ("triangles_shared_edge", "triangles_shared_vertex")


def fixture_path(name: str) -> Path:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; known: {FIXTURE_NAMES}")
    return Path(str(resources.files(__package__) / "fixtures" / f"{name}.json"))


def fixture_graph(name: str) -> Graph:
    return load_graph(fixture_path(name))
