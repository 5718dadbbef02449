"""Command-line front end: generators, feature export, verification, comparison.

Exit codes are a stable contract: 0 success (or property pass), 1
property failure, 2 usage error (bad flags or invalid parameters), 3
computation error. Machine-readable JSON lines go to stdout; anything
human-readable goes to stderr. ``CYCLE_ENCODE_THREADS`` caps worker
threads for candidate-cycle generation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .distinguish import compare
from .errors import (
    CycleEncError,
    GraphConstructionError,
    InvalidCfiParamsError,
    ParseError,
    TooLargeError,
    UnknownEncoderError,
    UnknownFamilyError,
)
from .export import write_csv, write_json_matrix, write_metadata, write_npy
from .generators import gen_cfi, gen_cycle_point_cloud, gen_rook4x4, gen_shrikhande
from .graph import Graph, build_graph, load_graph, save_graph
from .hodge import ZERO_TOL, betti_number, cycle_space_projector, incidence_matrix, kernel_basis
from .peoi import filter_enhanced_incidence, get_family, peoi_encode
from .scb import (
    brute_force_scb,
    cycle_incidence,
    cycles_to_json_dict,
    scb_edge_embedding,
    shortest_cycle_basis,
)
from .topo import coordinate_filter, cycle_epd, sssp_filter

USAGE_ERROR = 2
COMPUTE_ERROR = 3


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")


def _stderr(msg: str) -> None:
    sys.stderr.write(msg + "\n")


def _load(path: str) -> Graph:
    return load_graph(path)


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "rook4x4":
        g = gen_rook4x4()
    elif args.family == "shrikhande":
        g = gen_shrikhande()
    elif args.family == "cfi":
        if args.k is None or args.l is None:
            _stderr("cfi requires --k and --l")
            return USAGE_ERROR
        g = gen_cfi(args.k, args.l)
    else:  # cycle-point-cloud
        g = gen_cycle_point_cloud(
            seed=args.seed,
            n_large=args.n_large,
            n_small=args.n_small,
            d_large=args.d_large,
            d_small=args.d_small,
            knn_k=args.knn_k,
        )
    if args.out:
        save_graph(g, args.out)
    _emit({"n": g.n, "m": g.m, "betti": betti_number(g)})
    return 0


# ---------------------------------------------------------------------------
# features
# ---------------------------------------------------------------------------


def _edge_filter_values(g: Graph, spec: str) -> np.ndarray:
    if spec.startswith("sssp:"):
        return sssp_filter(g, int(spec.split(":", 1)[1])).edge_values
    if spec.startswith("coord:"):
        return coordinate_filter(g, int(spec.split(":", 1)[1])).edge_values
    raise UnknownEncoderError(f"unknown filter spec {spec!r}")


def _cmd_features(args: argparse.Namespace) -> int:
    if args.mode == "peoi":
        if not args.family:
            _stderr("--mode peoi requires --family")
            return USAGE_ERROR
        if args.family == "epd_min" and args.filter == "none":
            _stderr("family epd_min requires a filter (sssp:<root> or coord:<axis>)")
            return USAGE_ERROR
    g = _load(args.graph)
    meta: dict = {
        "mode": args.mode,
        "family": args.family,
        "filter": args.filter,
        "format": args.format,
        "betti": betti_number(g),
        "zero_tol": ZERO_TOL,
        "version": __version__,
    }
    scb_doc = None
    if args.mode == "projector":
        out_arr = cycle_space_projector(g).matrix
    elif args.mode == "kernel-basis":
        out_arr = kernel_basis(g).gamma
    else:
        basis = shortest_cycle_basis(g)
        meta["g"] = basis.g
        if args.mode == "scb":
            out_arr = cycle_incidence(basis).matrix
            scb_doc = cycles_to_json_dict(basis)
        elif args.mode == "scb-edge-hist":
            max_len = args.max_len or max((c.length for c in basis.cycles), default=3)
            out_arr = scb_edge_embedding(basis, max_len).matrix
            meta["max_len"] = max_len
        else:  # peoi
            fam = get_family(args.family)
            X = cycle_incidence(basis).matrix
            if args.filter != "none":
                X = filter_enhanced_incidence(X, _edge_filter_values(g, args.filter))
            out_arr = peoi_encode(X, fam).matrix
    meta["shape"] = list(out_arr.shape)
    meta["dtype"] = str(out_arr.dtype)
    out_path = Path(args.out)
    if args.format == "npy":
        write_npy(out_path, out_arr)
    elif args.format == "csv":
        F = out_arr if out_arr.ndim == 2 else out_arr[:, None]
        write_csv(out_path, g, F)
    else:  # json
        if scb_doc is not None:
            out_path.write_text(
                json.dumps(scb_doc, sort_keys=True, separators=(",", ":")) + "\n",
                encoding="utf-8",
            )
        else:
            write_json_matrix(out_path, out_arr)
    write_metadata(str(out_path) + ".meta.json", meta)
    _emit({"out": str(out_path), "shape": meta["shape"], "mode": args.mode})
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _verify_idempotent(g: Graph, trials: int, seed: int) -> tuple[bool, float]:
    O = cycle_space_projector(g).matrix
    res = max(
        float(np.abs(O - O.T).max()),
        float(np.abs(O @ O - O).max()),
        abs(float(np.trace(O)) - betti_number(g)),
    )
    return res < 1e-8, res


def _verify_basis_invariance(g: Graph, trials: int, seed: int) -> tuple[bool, float]:
    O = cycle_space_projector(g).matrix
    worst = 0.0
    for t in range(trials):
        rng = np.random.Generator(np.random.PCG64(seed + t))
        O2 = cycle_space_projector(g, rng).matrix
        worst = max(worst, float(np.linalg.norm(O2 - O)))
    return worst < 1e-8, worst


def _verify_equivariance(g: Graph, trials: int, seed: int) -> tuple[bool, float]:
    O = cycle_space_projector(g).matrix
    worst = 0.0
    for t in range(trials):
        rng = np.random.Generator(np.random.PCG64(seed + t))
        perm = rng.permutation(g.m)
        g2 = build_graph(g.n, [g.edges[p] for p in perm],
                         weights=None if g.weights is None else [g.weights[p] for p in perm])
        O2 = cycle_space_projector(g2).matrix
        worst = max(worst, float(np.abs(O2 - O[np.ix_(perm, perm)]).max()))
    return worst < 1e-10, worst


def _verify_scb_oracle(g: Graph, trials: int, seed: int) -> tuple[bool, float]:
    fast = shortest_cycle_basis(g)
    exact = brute_force_scb(g)
    diff = abs(fast.total_weight() - exact.total_weight())
    return diff == 0.0, diff


def _verify_hodge_orthogonality(g: Graph, trials: int, seed: int) -> tuple[bool, float]:
    from .hodge import hodge_decompose

    B = incidence_matrix(g).matrix
    worst = 0.0
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(max(trials, 1)):
        x = rng.normal(size=g.m)
        harmonic, gradient = hodge_decompose(g, x)
        denom = float(x @ x) or 1.0
        worst = max(worst, abs(float(harmonic @ gradient)) / denom)
        sol = np.linalg.lstsq(B.T, gradient, rcond=None)[0]
        worst = max(worst, float(np.linalg.norm(B.T @ sol - gradient)))
    return worst < 1e-8, worst


_PROPERTIES = {
    "idempotent": _verify_idempotent,
    "basis-invariance": _verify_basis_invariance,
    "equivariance": _verify_equivariance,
    "scb-oracle": _verify_scb_oracle,
    "hodge-orthogonality": _verify_hodge_orthogonality,
}


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.property not in _PROPERTIES:
        _stderr(f"unknown property {args.property!r}; known: {sorted(_PROPERTIES)}")
        return USAGE_ERROR
    g = _load(args.graph)
    passed, worst = _PROPERTIES[args.property](g, args.trials, args.seed)
    _emit(
        {
            "property": args.property,
            "passed": bool(passed),
            "worst_residual": worst,
            "trials": args.trials,
        }
    )
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# distinguish / epd
# ---------------------------------------------------------------------------


def _cmd_distinguish(args: argparse.Namespace) -> int:
    a = _load(args.a)
    b = _load(args.b)
    for encoder in args.encoder:
        verdict = compare(a, b, encoder)
        _emit(verdict.to_json_dict())
    return 0


def _cmd_epd(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    basis = shortest_cycle_basis(g)
    if args.filter.startswith("sssp:"):
        f = sssp_filter(g, int(args.filter.split(":", 1)[1]))
    elif args.filter.startswith("coord:"):
        f = coordinate_filter(g, int(args.filter.split(":", 1)[1]))
    else:
        _stderr(f"unknown filter {args.filter!r}")
        return USAGE_ERROR
    pairs = sorted(cycle_epd(basis, f))
    doc = [{"hi": p.hi, "lo": p.lo} for p in pairs]
    payload = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    if args.out:
        Path(args.out).write_text(payload + "\n", encoding="utf-8")
        _emit({"out": args.out, "pairs": len(doc)})
    else:
        sys.stdout.write(payload + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cycleenc",
        description="Cycle-aware edge structural encodings for graphs.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph family to JSON")
    p_gen.add_argument(
        "family", choices=["rook4x4", "shrikhande", "cfi", "cycle-point-cloud"]
    )
    p_gen.add_argument("--k", type=int, default=None)
    p_gen.add_argument("--l", type=int, default=None)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--n-large", type=int, default=20)
    p_gen.add_argument("--n-small", type=int, default=60)
    p_gen.add_argument("--d-large", type=float, default=20.0)
    p_gen.add_argument("--d-small", type=float, default=1.0)
    p_gen.add_argument("--knn-k", type=int, default=3)
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=_cmd_gen)

    p_feat = sub.add_parser("features", help="export feature matrices")
    p_feat.add_argument("--graph", required=True)
    p_feat.add_argument(
        "--mode",
        required=True,
        choices=["projector", "kernel-basis", "scb", "peoi", "scb-edge-hist"],
    )
    p_feat.add_argument("--family", default=None)
    p_feat.add_argument("--filter", default="none")
    p_feat.add_argument("--format", default="npy", choices=["json", "csv", "npy"])
    p_feat.add_argument("--max-len", type=int, default=None)
    p_feat.add_argument("--out", required=True)
    p_feat.set_defaults(func=_cmd_features)

    p_ver = sub.add_parser("verify", help="run a property suite on a graph")
    p_ver.add_argument("--graph", required=True)
    p_ver.add_argument("--property", required=True)
    p_ver.add_argument("--trials", type=int, default=20)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.set_defaults(func=_cmd_verify)

    p_dis = sub.add_parser("distinguish", help="compare two graphs under encoders")
    p_dis.add_argument("--a", required=True)
    p_dis.add_argument("--b", required=True)
    p_dis.add_argument("--encoder", action="append", required=True)
    p_dis.set_defaults(func=_cmd_distinguish)

    p_epd = sub.add_parser("epd", help="export cycle persistence pairs")
    p_epd.add_argument("--graph", required=True)
    p_epd.add_argument("--filter", required=True)
    p_epd.add_argument("--out", default=None)
    p_epd.set_defaults(func=_cmd_epd)
    return top


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphConstructionError, ParseError, InvalidCfiParamsError, UnknownFamilyError) as exc:
        _stderr(f"invalid input: {exc}")
        _emit({"error": str(exc)})
        return USAGE_ERROR
    except TooLargeError as exc:
        _stderr(f"input too large: {exc}")
        _emit({"error": str(exc)})
        return USAGE_ERROR
    except (CycleEncError, np.linalg.LinAlgError) as exc:
        _stderr(f"computation failed: {exc}")
        _emit({"error": str(exc)})
        return COMPUTE_ERROR


if __name__ == "__main__":
    sys.exit(main())
