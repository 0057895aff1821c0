"""Command-line harness.

Exit codes: 0 completed (and, for verification commands, the refutation was
reproduced), 1 completed but not reproduced, 2 usage or input error, 3 a
search or enumeration cap was exceeded.
"""

from __future__ import annotations

import argparse
import os
import random
import re
import sys
import time
from contextlib import contextmanager
from math import comb
from pathlib import Path
from typing import Optional

from . import laplante, polyclique, wood
from .choice import ChoicePolicy, Mode, ReplayError, SearchCapExceeded, default_node_cap
from .fixtures import fixture_names, load_fixture, tamta_parts
from .graph import Graph, GraphError, random_graph, read_graph, serialize_graph
from .oracle import has_k_clique, max_clique, maximal_cliques
from .report import Report, emit_report

EXIT_OK, EXIT_NOT_REPRODUCED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
MAX_SWEEP_K = 10


class UsageError(Exception):
    pass


class CapError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


# ---------------------------------------------------------------------------
# parser


def _source_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--fixture", help=f"builtin graph: {', '.join(fixture_names()[:3])}, tamta-<k>")
    src.add_argument("--graph", metavar="PATH", help="graph file (DIMACS .col or edge list)")
    p.add_argument("--graph-format", choices=["dimacs", "edge_list"], help="override format detection")


def _output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json"], default="text", help="report format")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--figures", metavar="DIR", help="render PNG figures into DIR")
    p.add_argument("--seed", type=int, default=None, help="seed (default $CLIQUELAB_SEED or 0)")
    p.add_argument("--timings", action="store_true", help="include wall times (breaks byte-identity)")


def _cap_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--node-cap", type=int, default=None,
                   help="choice-tree node cap (default $CLIQUELAB_NODE_CAP or 10^6)")


def _mode_arg(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--mode", choices=[m.value for m in Mode], required=required,
                   default=None if required else Mode.ADVERSARIAL.value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquelab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("oracle", help="exact maximum clique")
    _source_args(p)
    _output_args(p)
    p.add_argument("--maximal", action="store_true", help="also count maximal cliques")

    for algo in ("polyclique", "laplante"):
        ap = sub.add_parser(algo, help=f"{algo} runs and trace searches")
        actions = ap.add_subparsers(dest="action", required=True)
        for action in ("run", "search", "verify-counterexample"):
            p = actions.add_parser(action)
            _source_args(p)
            _output_args(p)
            if algo == "polyclique":
                p.add_argument("-k", type=int, default=None, help="clique size (default inferred)")
            if action == "run":
                p.add_argument("--script", metavar="PATH", help="replay this choice script")
            else:
                _cap_args(p)
            if action == "search":
                _mode_arg(p)
            p.add_argument("--script-out", metavar="PATH", help="store the choice script")

    rp = sub.add_parser("reduce", help="flow-interdiction reduction")
    actions = rp.add_subparsers(dest="action", required=True)
    p = actions.add_parser("build")
    _source_args(p)
    _output_args(p)
    p.add_argument("--dot", metavar="PATH", help="write the layered network as DOT")
    p = actions.add_parser("maxflow")
    _source_args(p)
    _output_args(p)
    p.add_argument("--remove-vertices", metavar="LABELS", help="comma-separated vertex labels to interdict")
    for action in ("lemma1", "theorem"):
        p = actions.add_parser(action)
        _source_args(p)
        _output_args(p)
        p.add_argument("--random", type=int, metavar="N", help="run on N seeded random graphs instead")
        if action == "lemma1":
            p.add_argument("--max-n", type=int, default=10)
        else:
            p.add_argument("-k", type=int, default=None, help="clique size for a single graph")
            p.add_argument("--ks", default="2,3,4", help="clique sizes for the random suite")
            p.add_argument("--max-edges", type=int, default=10)
            p.add_argument("--subset-cap", type=int, default=None,
                           help="A1' subset cap (default $CLIQUELAB_SUBSET_CAP or 10^6)")

    p = sub.add_parser("fixture", help="print a builtin graph")
    p.add_argument("name", help=f"one of {', '.join(fixture_names()[:3])}, tamta-<k>, or 'list'")
    p.add_argument("--as", dest="as_format", choices=["dimacs", "edge_list", "dot"], default="dimacs")
    p.add_argument("--highlight-max", action="store_true", help="DOT: colour the maximum clique")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("sweep", help="poly-clique over the k-indexed counterexample family")
    p.add_argument("--kmin", type=int, default=4)
    p.add_argument("--kmax", type=int, default=8)
    _mode_arg(p, required=False)
    _cap_args(p)
    _output_args(p)
    return parser


# ---------------------------------------------------------------------------
# helpers


def _load(args) -> tuple[Graph, str]:
    if getattr(args, "graph", None):
        return read_graph(args.graph, args.graph_format), f"file:{args.graph}"
    if getattr(args, "fixture", None):
        return load_fixture(args.fixture), f"fixture:{args.fixture}"
    raise UsageError("a graph source is required (--fixture or --graph)")


def _seed(args) -> int:
    return args.seed if args.seed is not None else _env_int("CLIQUELAB_SEED", 0)


def _node_cap(args) -> int:
    return args.node_cap if getattr(args, "node_cap", None) is not None else default_node_cap()


def _oracle_doc(g: Graph, with_maximal: bool = False) -> dict:
    res = max_clique(g)
    doc = {
        "size": res.size,
        "witness": sorted(res.witness),
        "witness_labels": [g.label(v) for v in sorted(res.witness)],
        "nodes_explored": res.node_count_explored,
    }
    if with_maximal:
        doc["maximal_cliques"] = len(maximal_cliques(g))
    return doc


def _infer_k(args, g: Graph) -> int:
    if args.k is not None:
        if args.k < 1:
            raise UsageError("-k must be at least 1")
        return args.k
    if getattr(args, "fixture", None) and args.fixture.startswith("tamta-"):
        return tamta_parts(int(args.fixture.split("-", 1)[1])).k
    return max_clique(g).size


def _read_script(path: Optional[str]) -> ChoicePolicy:
    if not path:
        return ChoicePolicy.lowest_id()
    with open(path) as fh:
        return ChoicePolicy.from_text(fh.read())


def _write_script(path: Optional[str], policy: ChoicePolicy, report: Report) -> None:
    if path:
        Path(path).write_text(policy.to_text())
        report.artifacts["script"] = str(path)


def _slug(*parts) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", "_".join(str(p) for p in parts if p not in (None, "")))


def _figure(args, report: Report, name: str, render) -> None:
    if not args.figures:
        return
    path = Path(args.figures) / f"{name}.png"
    report.artifacts.setdefault("figures", []).append(render(path))


def _exists(flag: bool) -> str:
    return (polyclique.Decision.CLIQUE_EXISTS if flag else polyclique.Decision.NO_CLIQUE).value


def _poly_outcome(g: Graph, k: int, mode: str, trace, truth: bool) -> dict:
    doc = {"algorithm": "polyclique", "k": k, "mode": mode, "oracle": _exists(truth),
           "found": trace is not None, "answer": None, "agreement": None,
           "trace": None, "trace_text": None, "notes": []}
    if trace is not None:
        doc["answer"] = trace.decision.value
        doc["agreement"] = (trace.decision is polyclique.Decision.CLIQUE_EXISTS) == truth
        doc["trace"] = trace.to_dict()
        doc["trace_text"] = trace.to_text(g)
        if trace.decision is polyclique.Decision.CLIQUE_EXISTS and not trace.final_T_is_clique:
            doc["notes"].append("decided CliqueExists but the surviving T is not a clique")
    return doc


def _lap_outcome(g: Graph, mode: str, result, target: int) -> dict:
    doc = {"algorithm": "laplante", "k": None, "mode": mode, "oracle": target,
           "found": result is not None, "answer": None, "agreement": None,
           "trace": None, "trace_text": None, "notes": []}
    if result is not None:
        doc["answer"] = result.global_max.size
        doc["agreement"] = result.global_max.size == target
        doc["trace"] = result.to_dict()
        doc["trace_text"] = "\n".join(t.to_text(g) for t in result.traces) + (
            f"\nglobal max {g.fmt_set(result.global_max.witness)}\n"
        )
    return doc


class _Clock:
    def __init__(self):
        self.stages: dict[str, float] = {}

    @contextmanager
    def __call__(self, stage: str):
        t = time.perf_counter()
        try:
            yield
        finally:
            self.stages[stage] = self.stages.get(stage, 0.0) + time.perf_counter() - t


# ---------------------------------------------------------------------------
# commands


def cmd_oracle(args, clock) -> tuple[Report, int]:
    g, source = _load(args)
    with clock("oracle"):
        oracle = _oracle_doc(g, args.maximal)
    report = Report("oracle", source, g.n, g.m, _seed(args), oracle=oracle)
    _figure(args, report, _slug("oracle", args.fixture or Path(args.graph).stem),
            lambda p: _plot().graph_figure(g, p, oracle["witness"], f"maximum clique, size {oracle['size']}"))
    return report, EXIT_OK


def _plot():
    from . import plotting

    return plotting


def cmd_polyclique(args, clock) -> tuple[Report, int]:
    g, source = _load(args)
    k = _infer_k(args, g)
    with clock("oracle"):
        oracle = _oracle_doc(g)
        truth = has_k_clique(g, k) is not None
    command = f"polyclique {args.action}"
    report = Report(command, source, g.n, g.m, _seed(args), oracle=oracle)
    status = EXIT_OK
    if args.action == "run":
        policy = _read_script(args.script)
        with clock("run"):
            trace = polyclique.run(g, k, policy, check=True)
        mode = policy.kind
        report.outcomes.append(_poly_outcome(g, k, mode, trace, truth))
    else:
        mode = Mode(args.mode) if args.action == "search" else Mode.ADVERSARIAL
        with clock("search"):
            try:
                outcome = polyclique.search_traces(g, k, mode, _node_cap(args))
            except SearchCapExceeded as exc:
                raise CapError(f"{exc} (nodes={exc.stats.nodes})") from exc
        trace = outcome.found
        report.search = outcome.stats.to_dict()
        report.outcomes.append(_poly_outcome(g, k, mode.value, trace, truth))
        if args.action == "verify-counterexample":
            report.claim_reproduced = trace is not None
            status = EXIT_OK if trace is not None else EXIT_NOT_REPRODUCED
    if trace is not None:
        _write_script(args.script_out, trace.policy, report)
        _figure(args, report, _slug("polyclique", args.action, args.fixture or Path(args.graph).stem, f"k{k}"),
                lambda p: _plot().polyclique_figure(g, trace, p))
    return report, status


def cmd_laplante(args, clock) -> tuple[Report, int]:
    g, source = _load(args)
    with clock("oracle"):
        oracle = _oracle_doc(g)
    target = oracle["size"]
    report = Report(f"laplante {args.action}", source, g.n, g.m, _seed(args), oracle=oracle)
    status = EXIT_OK
    if args.action == "run":
        policy = _read_script(args.script)
        with clock("run"):
            result = laplante.run(g, policy)
        report.outcomes.append(_lap_outcome(g, policy.kind, result, target))
    else:
        mode = Mode(args.mode) if args.action == "search" else Mode.ADVERSARIAL
        with clock("search"):
            try:
                outcome = laplante.search_traces(g, mode, _node_cap(args))
            except SearchCapExceeded as exc:
                raise CapError(f"{exc} (nodes={exc.stats.nodes})") from exc
        result = outcome.found
        report.search = outcome.stats.to_dict()
        report.outcomes.append(_lap_outcome(g, mode.value, result, target))
        if args.action == "verify-counterexample":
            report.claim_reproduced = result is not None
            status = EXIT_OK if result is not None else EXIT_NOT_REPRODUCED
    if result is not None:
        _write_script(args.script_out, result.policy, report)
        _figure(args, report, _slug("laplante", args.action, args.fixture or Path(args.graph).stem),
                lambda p: _plot().laplante_figure(g, result.global_max.witness, oracle["witness"], p))
    return report, status


def _random_lemma1(args, clock) -> tuple[Report, int]:
    seed = _seed(args)
    rng = random.Random(seed)
    rows = []
    with clock("lemma1"):
        for i in range(args.random):
            n = rng.randint(1, args.max_n)
            p = rng.uniform(0.1, 0.9)
            g = random_graph(n, p, rng)
            flow = wood.max_flow(wood.build_gh(g))
            rows.append({"graph": i, "n": n, "edges": g.m, "density": round(p, 4),
                         "max_flow": flow, "non_isolated": wood.non_isolated(g),
                         "holds": flow == wood.non_isolated(g)})
    report = Report("reduce lemma1", f"random:count={args.random},max_n={args.max_n}", 0, 0, seed,
                    rows=rows, claim_reproduced=all(r["holds"] for r in rows))
    return report, EXIT_OK if report.claim_reproduced else EXIT_NOT_REPRODUCED


def _subset_cap(args) -> int:
    if args.subset_cap is not None:
        return args.subset_cap
    return _env_int("CLIQUELAB_SUBSET_CAP", wood.DEFAULT_SUBSET_CAP)


def _certify(g: Graph, k: int, cap: int) -> wood.WoodCertificate:
    try:
        return wood.wood_certificate(g, k, cap)
    except wood.SubsetCapExceeded as exc:
        raise CapError(str(exc)) from exc


def _theorem_row(cert: wood.WoodCertificate, **extra) -> dict:
    return {**extra, "k": cert.k, "removal_size": cert.removal_size, "flow_side": cert.flow_side,
            "clique_side": cert.clique is not None, "subsets_checked": cert.subsets_checked,
            "holds": cert.holds}


def random_small_graphs(count: int, max_edges: int, rng: random.Random) -> list[Graph]:
    """Seeded G(n, p) draws, redrawn until they have at most `max_edges` edges."""
    out = []
    while len(out) < count:
        n = rng.randint(2, 8)
        g = random_graph(n, rng.uniform(0.2, 0.9), rng)
        if g.m <= max_edges:
            out.append(g)
    return out


def cmd_reduce(args, clock) -> tuple[Report, int]:
    if args.action in ("lemma1", "theorem") and args.random:
        if args.action == "lemma1":
            return _random_lemma1(args, clock)
        seed = _seed(args)
        ks = [int(x) for x in args.ks.split(",") if x]
        rows = []
        with clock("theorem"):
            graphs = random_small_graphs(args.random, args.max_edges, random.Random(seed))
            for i, g in enumerate(graphs):
                for k in ks:
                    rows.append(_theorem_row(_certify(g, k, _subset_cap(args)), graph=i, n=g.n, edges=g.m))
        report = Report("reduce theorem", f"random:count={args.random},max_edges={args.max_edges}",
                        0, 0, seed, rows=rows, claim_reproduced=all(r["holds"] for r in rows))
        return report, EXIT_OK if report.claim_reproduced else EXIT_NOT_REPRODUCED

    g, source = _load(args)
    report = Report(f"reduce {args.action}", source, g.n, g.m, _seed(args))
    net = wood.build_gh(g)
    status = EXIT_OK
    if args.action == "build":
        report.rows.append({
            "nodes": len(net.nodes), "N1": len(net.edge_nodes), "N2": len(net.vertex_nodes),
            "A1": len(net.layer("A1")), "A2": len(net.layer("A2")), "A3": len(net.layer("A3")),
            "arcs": len(net.arcs),
        })
        if args.dot:
            Path(args.dot).write_text(wood.gh_to_dot(net))
            report.artifacts["dot"] = str(args.dot)
        _figure(args, report, _slug("gh", args.fixture or Path(args.graph).stem),
                lambda p: _plot().gh_figure(net, p))
    elif args.action == "maxflow":
        with clock("maxflow"):
            row = {"max_flow": wood.max_flow(net), "non_isolated": wood.non_isolated(g)}
            if args.remove_vertices:
                removed = g.ids(*[s.strip() for s in args.remove_vertices.split(",") if s.strip()])
                row["removed"] = [g.label(v) for v in sorted(removed)]
                row["interdicted_flow"] = wood.vertex_interdiction_value(g, removed)
        report.rows.append(row)
    elif args.action == "lemma1":
        holds = wood.check_lemma1(g)
        report.rows.append({"max_flow": wood.max_flow(net), "non_isolated": wood.non_isolated(g), "holds": holds})
        report.claim_reproduced = holds
        status = EXIT_OK if holds else EXIT_NOT_REPRODUCED
    else:
        ks = [args.k] if args.k is not None else [int(x) for x in args.ks.split(",") if x]
        with clock("theorem"):
            for k in ks:
                cert = _certify(g, k, _subset_cap(args))
                row = _theorem_row(cert)
                row["witness_A1_removed"] = (
                    None if cert.removed_arcs is None
                    else [f"{g.label(u)}-{g.label(v)}" for u, v in cert.removed_arcs]
                )
                report.rows.append(row)
        report.claim_reproduced = all(r["holds"] for r in report.rows)
        status = EXIT_OK if report.claim_reproduced else EXIT_NOT_REPRODUCED
    return report, status


def sweep_family(kmin: int, kmax: int, mode: Mode, node_cap: Optional[int] = None) -> list[dict]:
    """One row per k over the family, with the cost structure and search result."""
    if kmin < 4:
        raise UsageError("the family is defined for k >= 4")
    if kmin > kmax:
        raise UsageError("kmin must not exceed kmax")
    if kmax > MAX_SWEEP_K:
        raise CapError(f"kmax {kmax} exceeds the desk-scale cap {MAX_SWEEP_K}")
    mode = Mode(mode)
    rows = []
    for k in range(kmin, kmax + 1):
        parts = tamta_parts(k)
        g = load_fixture(f"tamta-{k}")
        state = polyclique.init_state(g, k)
        cost, cheapest = state.cheapest_pairs()
        inner = set(parts.inner_pairs)
        try:
            outcome = polyclique.search_traces(g, k, mode, node_cap)
        except SearchCapExceeded as exc:
            raise CapError(f"k={k}: {exc}") from exc
        trace = outcome.found
        rows.append({
            "k": k, "n": g.n, "edges": g.m, "oracle": max_clique(g).size,
            "min_pair_cost": cost, "inner_min_pairs": sum(1 for p in cheapest if p in inner),
            "expected_inner": comb(k - 2, 2), "found": trace is not None,
            "decision": trace.decision.value if trace else None,
            "agreement": None if trace is None else trace.decision is polyclique.Decision.CLIQUE_EXISTS,
            "runs": outcome.stats.runs,
        })
    return rows


def cmd_sweep(args, clock) -> tuple[Report, int]:
    with clock("sweep"):
        rows = sweep_family(args.kmin, args.kmax, Mode(args.mode), _node_cap(args))
    report = Report("sweep", f"family:k={args.kmin}..{args.kmax}", 0, 0, _seed(args), rows=rows,
                    claim_reproduced=all(r["found"] for r in rows))
    _figure(args, report, _slug("sweep", args.kmin, args.kmax, args.mode),
            lambda p: _plot().sweep_figure(rows, p))
    return report, EXIT_OK if report.claim_reproduced else EXIT_NOT_REPRODUCED


def cmd_fixture(args) -> int:
    if args.name == "list":
        text = "\n".join(fixture_names()) + "\n"
    else:
        g = load_fixture(args.name)
        highlight = max_clique(g).witness if args.highlight_max else ()
        text = serialize_graph(g, args.as_format, highlight)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {
    "oracle": cmd_oracle,
    "polyclique": cmd_polyclique,
    "laplante": cmd_laplante,
    "reduce": cmd_reduce,
    "sweep": cmd_sweep,
}


def cmd_dispatch(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "fixture":
            return cmd_fixture(args)
        clock = _Clock()
        report, status = COMMANDS[args.command](args, clock)
        if args.timings:
            report.timings = {k: round(v, 6) for k, v in clock.stages.items()}
        text = emit_report(report, args.format)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return status
    except UsageError as exc:
        print(f"cliquelab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapError as exc:
        print(f"cliquelab: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphError, ReplayError, ValueError, OSError) as exc:
        print(f"cliquelab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Optional[list[str]] = None) -> int:
    return cmd_dispatch(argv)


if __name__ == "__main__":
    sys.exit(main())
