"""Command-line entry point binding all modules to files.

Exit codes: 0 success, 1 usage or input error, 2 numerical failure (the
diagnostic report is still emitted). All structured output is JSON with sorted
keys and 12-significant-digit floats; bulk numeric tables are TSV.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .cochains import Cochain, WeightScheme, read_cochain_tsv, read_weights_tsv, write_cochain_tsv
from .complexes import Graph, InputFormatError, enumerate_cliques, parse_graph
from .decompose import ConvergenceError, HodgeSplit, hodge_decompose
from .games import (
    GameForm,
    decompose_game_flow,
    game_flow,
    is_harmonic_game,
    is_potential_game,
    pure_nash,
    strategy_graph,
)
from .hodgerank import ComparisonData, RankingResult, aggregate, rank
from .nonlinear import apply_p_laplacian, cheeger_check
from .operators import coboundary, hodge_laplacian, write_matrix
from .spectral import Spectrum, compare_fingerprints, isospectral_fingerprint, spectrum
from .textio import json_dumps, tsv_lines


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def emit_plot_data(obj) -> str:
    """Flatten a Spectrum, HodgeSplit, or RankingResult into plotting TSV."""
    if isinstance(obj, Spectrum):
        return tsv_lines((i + 1, v) for i, v in enumerate(obj.eigenvalues))
    if isinstance(obj, HodgeSplit):
        cliques = obj.input.complex.cliques(obj.input.degree + 1)
        rows = []
        for i, clique in enumerate(cliques):
            rows.append(
                tuple(clique)
                + (
                    float(obj.input.values[i]),
                    float(obj.exact.values[i]),
                    float(obj.harmonic.values[i]),
                    float(obj.coexact.values[i]),
                )
            )
        return tsv_lines(rows)
    if isinstance(obj, RankingResult):
        return tsv_lines(
            (pos + 1, item, obj.scores[item]) for pos, item in enumerate(obj.order)
        )
    raise TypeError(f"no plot data emitter for {type(obj).__name__}")


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _load_weights(args) -> WeightScheme:
    if getattr(args, "weights", None):
        return read_weights_tsv(_read_text(args.weights))
    return WeightScheme.unit()


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _write_plot(args, obj) -> None:
    if getattr(args, "plot", None):
        Path(args.plot).write_text(emit_plot_data(obj))


def _kernel_dim(eigenvalues: np.ndarray, tol: float) -> int:
    return int(np.count_nonzero(eigenvalues <= tol))


def _spectrum_dict(spec: Spectrum, tol_override: float | None) -> dict:
    out = spec.to_json_dict()
    if tol_override is not None:
        out["tolerance"] = tol_override
        out["betti"] = _kernel_dim(spec.eigenvalues, tol_override)
    return out


def _cmd_cliques(args) -> int:
    graph = _load_graph(args.input)
    cx = enumerate_cliques(graph, args.max_order)
    payload = {
        "n_vertices": graph.n_vertices,
        "max_order": cx.max_order,
        "cliques": {str(k): [list(c) for c in cx.cliques(k)] for k in range(1, cx.max_order + 1)},
        "counts": {str(k): cx.n_cliques(k) for k in range(1, cx.max_order + 1)},
        "clique_number": cx.clique_number(),
    }
    _write(args, json_dumps(payload) + "\n")
    return 0


def _cmd_operator(args) -> int:
    graph = _load_graph(args.input)
    cx = enumerate_cliques(graph, max(args.max_order, args.k + 2))
    op = coboundary(cx, args.k)
    _write(args, write_matrix(op.matrix))
    return 0


def _cmd_laplacian(args) -> int:
    graph = _load_graph(args.input)
    cx = enumerate_cliques(graph, max(args.max_order, args.k + 2))
    lap = hodge_laplacian(cx, args.k, _load_weights(args))
    _write(args, write_matrix(lap.matrix))
    return 0


def _cmd_spectrum(args) -> int:
    graph = _load_graph(args.input)
    cx = enumerate_cliques(graph, max(args.max_order, args.k + 2))
    spec = spectrum(hodge_laplacian(cx, args.k, _load_weights(args)))
    _write(args, json_dumps(_spectrum_dict(spec, args.tolerance)) + "\n")
    _write_plot(args, spec)
    return 0


def _cmd_betti(args) -> int:
    graph = _load_graph(args.input)
    cx = enumerate_cliques(graph, max(args.max_order, args.k + 2))
    spec = spectrum(hodge_laplacian(cx, args.k, _load_weights(args)))
    info = _spectrum_dict(spec, args.tolerance)
    payload = {"betti": info["betti"], "k": args.k, "tolerance": info["tolerance"]}
    _write(args, json_dumps(payload) + "\n")
    return 0


def _cmd_decompose(args) -> int:
    graph = _load_graph(args.input)
    text = _read_text(args.cochain)
    first = next(
        (ln.split("#", 1)[0].split() for ln in text.splitlines() if ln.split("#", 1)[0].strip()),
        None,
    )
    if first is None:
        raise InputFormatError("cochain document has no data lines")
    degree = len(first) - 2
    cx = enumerate_cliques(graph, max(args.max_order, degree + 2))
    c = read_cochain_tsv(text, cx, degree)
    split = hodge_decompose(c, _load_weights(args), method=args.method)
    _write(args, json_dumps(split.to_json_dict()) + "\n")
    _write_plot(args, split)
    return 0


def _cmd_rank(args) -> int:
    data = ComparisonData.from_csv(_read_text(args.input))
    cf = aggregate(data, model=args.model)
    result = rank(cf)
    payload = result.to_json_dict()
    payload["model"] = args.model
    payload["edges"] = [
        {
            "item_i": cf.items[u - 1],
            "item_j": cf.items[v - 1],
            "x": float(cf.flow.values[i]),
            "weight": result.edge_weights[(u, v)],
        }
        for i, (u, v) in enumerate(cf.graph.sorted_edges)
    ]
    _write(args, json_dumps(payload) + "\n")
    _write_plot(args, result)
    return 0


def _cmd_game(args) -> int:
    try:
        doc = json.loads(_read_text(args.input))
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid game JSON: {exc}") from None
    if "strategies" not in doc or "utilities" not in doc:
        raise InputFormatError("game JSON needs 'strategies' and 'utilities'")
    form = GameForm.from_tables(doc["strategies"], doc["utilities"])
    sg = strategy_graph(form)
    flow = game_flow(form, sg)
    split = decompose_game_flow(flow)
    names = [",".join(p) for p in sg.profiles]
    edges = sg.graph.sorted_edges

    def flow_rows(cochain: Cochain):
        return [
            (names[u - 1], names[v - 1], float(cochain.values[i]))
            for i, (u, v) in enumerate(edges)
        ]

    payload = {
        "profiles": names,
        "flow": [[a, b, x] for a, b, x in flow_rows(flow)],
        "potential_flow": [[a, b, x] for a, b, x in flow_rows(split.potential_flow)],
        "harmonic_flow": [[a, b, x] for a, b, x in flow_rows(split.harmonic_flow)],
        "potential": {names[i]: float(v) for i, v in enumerate(split.potential.values)},
        "is_potential_game": is_potential_game(form),
        "is_harmonic_game": is_harmonic_game(form),
        "pure_nash": [",".join(p) for p in pure_nash(form)],
    }
    _write(args, json_dumps(payload) + "\n")
    if args.flow_out:
        Path(args.flow_out).write_text(tsv_lines(flow_rows(flow)))
    return 0


def _cmd_cheeger(args) -> int:
    report = cheeger_check(_load_graph(args.input))
    _write(args, json_dumps(report.to_json_dict()) + "\n")
    return 0


def _cmd_plap(args) -> int:
    graph = _load_graph(args.input)
    cx = enumerate_cliques(graph, 1)
    values = read_cochain_tsv(_read_text(args.f), cx, 0).values
    if args.p > 1:
        out = apply_p_laplacian(graph, values, args.p)
        payload = {"p": args.p, "values": [float(x) for x in out]}
    else:
        if args.mode == "selection":
            out = apply_p_laplacian(graph, values, 1.0, mode="selection")
            payload = {"p": 1.0, "mode": "selection", "values": [float(x) for x in out]}
        else:
            out = apply_p_laplacian(graph, values, 1.0, mode="interval")
            payload = {"p": 1.0, "mode": "interval", "intervals": [[float(a), float(b)] for a, b in out]}
    _write(args, json_dumps(payload) + "\n")
    return 0


def _cmd_isospectral(args) -> int:
    fa = isospectral_fingerprint(_load_graph(args.graphs[0]), args.max_k)
    fb = isospectral_fingerprint(_load_graph(args.graphs[1]), args.max_k)
    distinguished, level = compare_fingerprints(fa, fb)
    payload = {
        "distinguished": distinguished,
        "first_differing_k": level,
        "fingerprint_a": [s.to_json_dict() for s in fa],
        "fingerprint_b": [s.to_json_dict() for s in fb],
    }
    _write(args, json_dumps(payload) + "\n")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="graphhodge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--output", help="write the main document here instead of stdout")
        p.add_argument("--seed", type=int, default=None, help="seed for randomized helpers")
        return p

    p = add("cliques", _cmd_cliques, help="enumerate the clique complex")
    p.add_argument("--input", required=True)
    p.add_argument("--max-order", type=int, default=3)

    for name, func, helptext in (
        ("operator", _cmd_operator, "export a coboundary operator matrix"),
        ("laplacian", _cmd_laplacian, "export a Hodge Laplacian matrix"),
        ("spectrum", _cmd_spectrum, "eigenvalues of a Hodge Laplacian"),
        ("betti", _cmd_betti, "kernel dimension of a Hodge Laplacian"),
    ):
        p = add(name, func, help=helptext)
        p.add_argument("--input", required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--max-order", type=int, default=3)
        if name in ("laplacian", "spectrum", "betti"):
            p.add_argument("--weights", help="weight TSV file")
        if name in ("spectrum", "betti"):
            p.add_argument("--tolerance", type=float, default=None, help="kernel tolerance override")
        if name == "spectrum":
            p.add_argument("--plot", help="write index/eigenvalue TSV here")

    p = add("decompose", _cmd_decompose, help="least-squares Hodge decomposition of a cochain")
    p.add_argument("--input", required=True)
    p.add_argument("--cochain", required=True, help="cochain TSV file")
    p.add_argument("--method", choices=("two-solve", "laplacian-residual"), default="two-solve")
    p.add_argument("--weights")
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--plot", help="write per-clique component TSV here")

    p = add("rank", _cmd_rank, help="rank items from comparison data")
    p.add_argument("--input", required=True, help="ratings or pairwise CSV")
    p.add_argument("--model", choices=("mean", "logodds"), default="mean")
    p.add_argument("--plot", help="write rank/item/score TSV here")

    p = add("game", _cmd_game, help="analyze a normal-form game")
    p.add_argument("--input", required=True, help="game JSON file")
    p.add_argument("--flow-out", help="write the game flow TSV here")

    p = add("cheeger", _cmd_cheeger, help="exact Cheeger constant and eigenvalue bounds")
    p.add_argument("--input", required=True)

    p = add("plap", _cmd_plap, help="apply the nonlinear p-Laplacian")
    p.add_argument("--input", required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--f", required=True, help="vertex-function TSV file")
    p.add_argument("--mode", choices=("interval", "selection"), default="interval")

    p = add("isospectral", _cmd_isospectral, help="compare Hodge spectra of two graphs")
    p.add_argument("graphs", nargs=2, metavar="GRAPH")
    p.add_argument("--max-k", type=int, default=2)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    if getattr(args, "seed", None) is not None:
        np.random.seed(args.seed)
    try:
        return args.func(args)
    except ConvergenceError as exc:
        diagnostic = {"error": str(exc), "residual": exc.residual, "iterations": exc.iterations}
        _write(args, json_dumps(diagnostic) + "\n")
        return 2
    except (InputFormatError, ValueError) as exc:
        sys.stderr.write(f"graphhodge: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
