"""Acceptance suite: every criterion at its stated tolerance, one line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
PASS/FAIL lines alongside the pytest verdicts.
"""

from __future__ import annotations

import time

import numpy as np
import pytest

from cycleenc import (
    betti_number,
    brute_force_scb,
    column_zero_counts,
    compare,
    cycle_incidence,
    cycle_space_projector,
    family_counting,
    family_counting_general,
    family_epd_min,
    fixture_graph,
    gen_cfi,
    gen_cycle_point_cloud,
    gen_rook4x4,
    gen_shrikhande,
    min_mlp,
    peoi_encode,
    scb_length_histogram,
    shortest_cycle_basis,
    sssp_filter,
    cycle_epd,
    epd_multisets_equal,
)
from cycleenc.topo import PersistencePair
from conftest import oracle_component_count, random_graph


def report(criterion: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {criterion}: {status}" + (f" ({detail})" if detail else ""))
    assert ok, f"{criterion}: {detail}"


def test_c1_projector_zero_counts():
    t0 = time.perf_counter()
    O_rook = cycle_space_projector(gen_rook4x4()).matrix
    rook_time = time.perf_counter() - t0
    t0 = time.perf_counter()
    O_sh = cycle_space_projector(gen_shrikhande()).matrix
    sh_time = time.perf_counter() - t0
    ok = (
        column_zero_counts(O_rook, 1e-9) == [22] * 48
        and column_zero_counts(O_sh, 1e-9) == [16] * 48
        and rook_time < 1.0
        and sh_time < 1.0
    )
    report("C1 projector zero counts", ok, f"rook {rook_time:.3f}s, shrikhande {sh_time:.3f}s")


def test_c2_scb_composition():
    t0 = time.perf_counter()
    rook_hist = scb_length_histogram(shortest_cycle_basis(gen_rook4x4()))
    rook_time = time.perf_counter() - t0
    t0 = time.perf_counter()
    sh_hist = scb_length_histogram(shortest_cycle_basis(gen_shrikhande()))
    sh_time = time.perf_counter() - t0
    ok = (
        rook_hist == {3: 24, 4: 9}
        and sh_hist == {3: 31, 4: 2}
        and sum(rook_hist.values()) == 33
        and sum(sh_hist.values()) == 33
        and rook_time < 5.0
        and sh_time < 5.0
    )
    report("C2 SCB composition", ok, f"rook {rook_hist}, shrikhande {sh_hist}")


def test_c3_cfi_pair():
    t0 = time.perf_counter()
    g0 = gen_cfi(4, 0)
    g1 = gen_cfi(4, 1)
    hist0 = scb_length_histogram(shortest_cycle_basis(g0))
    hist1 = scb_length_histogram(shortest_cycle_basis(g1))
    wl_verdict = compare(g0, g1, "wl1")
    scb_verdict = compare(g0, g1, "scb-lengths")
    elapsed = time.perf_counter() - t0
    ok = (
        g0.n == 40
        and g1.n == 40
        and hist0 == {3: 281}
        and hist1.get(4, 0) >= 1
        and not wl_verdict.distinguished
        and scb_verdict.distinguished
        and elapsed < 60.0
    )
    report(
        "C3 CFI pair",
        ok,
        f"hist0={hist0}, hist1={hist1}, wl1={wl_verdict.result}, "
        f"scb-lengths={scb_verdict.result}, {elapsed:.1f}s",
    )


def test_c4_peoi_vectors():
    fam = family_counting()
    vec_a = peoi_encode(
        cycle_incidence(shortest_cycle_basis(fixture_graph("triangles_shared_edge"))).matrix, fam
    ).matrix[:, 0]
    vec_b = peoi_encode(
        cycle_incidence(shortest_cycle_basis(fixture_graph("triangles_shared_vertex"))).matrix, fam
    ).matrix[:, 0]
    ok = vec_a.tolist() == [4, 4, 2, 6, 4, 4, 4, 2, 2] and vec_b.tolist() == [
        4, 4, 2, 6, 4, 2, 6, 2, 2,
    ]
    report("C4 PEOI vectors", ok, f"a={vec_a.tolist()}, b={vec_b.tolist()}")


def test_c5_epd():
    tri_edge = fixture_graph("triangles_shared_edge")
    tri_vertex = fixture_graph("triangles_shared_vertex")
    expected = [PersistencePair(3, 1), PersistencePair(3, 2), PersistencePair(4, 3)]
    pairs_a = cycle_epd(shortest_cycle_basis(tri_edge), sssp_filter(tri_edge, 0))
    pairs_b = cycle_epd(shortest_cycle_basis(tri_vertex), sssp_filter(tri_vertex, 0))
    epd_verdict = compare(tri_edge, tri_vertex, "epd:sssp:0")
    peoi_verdict = compare(tri_edge, tri_vertex, "peoi:epd_min:sssp:0")
    ok = (
        epd_multisets_equal(pairs_a, expected)
        and epd_multisets_equal(pairs_b, expected)
        and not epd_verdict.distinguished
        and peoi_verdict.distinguished
    )
    report(
        "C5 EPD",
        ok,
        f"epd={epd_verdict.result}, peoi(epd_min, filtered)={peoi_verdict.result}",
    )


def test_c6_wl_harness():
    t0 = time.perf_counter()
    rook = gen_rook4x4()
    sh = gen_shrikhande()
    verdicts = {
        name: compare(rook, sh, name)
        for name in ("fwl2", "wl1", "projector-zeros", "scb-lengths")
    }
    elapsed = time.perf_counter() - t0
    ok = (
        not verdicts["fwl2"].distinguished
        and not verdicts["wl1"].distinguished
        and verdicts["projector-zeros"].distinguished
        and verdicts["scb-lengths"].distinguished
        and elapsed < 30.0
    )
    report(
        "C6 WL harness",
        ok,
        ", ".join(f"{k}={v.result}" for k, v in verdicts.items()) + f", {elapsed:.1f}s",
    )


def test_c7_property_suites():
    worst_proj = 0.0
    worst_forest = 0.0
    for seed in range(200):
        g = random_graph(seed, n_max=12, m_max=14)
        O = cycle_space_projector(g).matrix
        worst_proj = max(
            worst_proj,
            float(np.abs(O - O.T).max()),
            float(np.linalg.norm(O @ O - O)),
            abs(float(np.trace(O)) - betti_number(g)),
        )
        for t in range(20):
            rng = np.random.Generator(np.random.PCG64(seed * 1000 + t))
            O2 = cycle_space_projector(g, rng).matrix
            worst_forest = max(worst_forest, float(np.linalg.norm(O2 - O)))
        basis = shortest_cycle_basis(g)
        assert basis.total_weight() == brute_force_scb(g).total_weight(), seed
        X = cycle_incidence(basis).matrix.astype(np.int64)
        fam = family_counting_general(g.m)
        F = peoi_encode(X, fam).matrix
        rng = np.random.Generator(np.random.PCG64(seed))
        if X.shape[1]:
            row_perm = rng.permutation(X.shape[0])
            col_perm = rng.permutation(X.shape[1])
            assert np.array_equal(peoi_encode(X[row_perm], fam).matrix, F[row_perm]), seed
            assert np.array_equal(peoi_encode(X[:, col_perm], fam).matrix, F), seed
    rng = np.random.Generator(np.random.PCG64(424242))
    xs = rng.integers(-10**9, 10**9, size=10_000).astype(float)
    ys = rng.integers(-10**9, 10**9, size=10_000).astype(float)
    min_exact = np.array_equal(min_mlp(xs, ys), np.minimum(xs, ys))
    ok = worst_proj < 1e-9 and worst_forest < 1e-8 and min_exact
    report(
        "C7 property suites",
        ok,
        f"200 graphs, worst projector residual {worst_proj:.2e}, "
        f"worst forest deviation {worst_forest:.2e}, min_mlp exact on 1e4 pairs: {min_exact}",
    )


def test_c8_betti_oracle():
    bad = []
    for seed in range(50):
        g = gen_cycle_point_cloud(seed=seed)
        c = oracle_component_count(g.n, g.edges)
        if betti_number(g) != g.m - g.n + c:
            bad.append(seed)
    report("C8 Betti oracle", not bad, f"50 point clouds, mismatches: {bad}")
