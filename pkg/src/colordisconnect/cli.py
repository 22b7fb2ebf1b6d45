"""Command-line interface.

Exit codes: 0 success or agreement, 1 verified negative answer, 2 budget
refusal or unusable input, 3 internal verification failure or oracle
disagreement.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .constructive import classify_indep_deg3, color_max_deg3, matching_cut_indep_deg3
from .cuts import EdgeColoring, find_matching_cut
from .generators import all_cnf, gen_instances
from .graph import GraphError, Multigraph
from .reductions import build_Gphi_nae, build_Hphi_prime, edge_to_4cycle, pad_with_path
from .solvers import (
    BudgetExceeded,
    VerificationError,
    is_proper_disconnected,
    is_rainbow_vertex_disconnected,
    pd_exact,
    rvd_exact,
)
from .xcheck import RunConfig, build_rvd_variant, xcheck_nae, xcheck_pad, xcheck_sat_rvd

OK, NEGATIVE, REFUSED, FAILED = 0, 1, 2, 3


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _write(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _save(args, text: str) -> None:
    """Secondary output (a colored graph) is only written with --out."""
    if args.out:
        Path(args.out).write_text(text)


def _write_dot(args, text: str) -> None:
    if args.dot:
        Path(args.dot).write_text(text)


def _vertex(g: Multigraph, token: str) -> int:
    """A 1-based vertex number or a vertex label."""
    if token.isdigit():
        v = int(token) - 1
        if v not in g:
            raise GraphError(f"vertex {token} not in graph")
        return v
    return g.vertex(token)


def _terminals(args, gf: formats.GraphFile) -> tuple[int, int]:
    if args.x is not None and args.y is not None:
        return _vertex(gf.graph, args.x), _vertex(gf.graph, args.y)
    pair = gf.terminal_pair()
    if pair is None:
        raise GraphError("give two terminal vertices or 'c terminal' lines in the graph file")
    return pair


def _edge_numbers(g: Multigraph, cut) -> str:
    """1-based positions of the cut edges in the file's edge order."""
    emap = {e: i + 1 for i, e in enumerate(g.edge_ids)}
    return " ".join(str(emap[e]) for e in sorted(cut))


# -- subcommands ------------------------------------------------------------


def cmd_pd(args) -> int:
    gf = formats.parse_graph_file(_read(args.graph))
    res = pd_exact(gf.graph, args.budget_edges)
    print(f"pd = {res.value}")
    _save(args, formats.emit_edge_list(gf.graph, res.witness))
    _write_dot(args, formats.emit_dot(gf.graph, res.witness))
    return OK


def cmd_rvd(args) -> int:
    gf = formats.parse_graph_file(_read(args.graph))
    res = rvd_exact(gf.graph, args.budget_vertices)
    print(f"rvd = {res.value}")
    _save(args, formats.emit_edge_list(gf.graph, vertex_coloring=res.witness))
    _write_dot(args, formats.emit_dot(gf.graph, vertex_coloring=res.witness))
    return OK


def _pair_text(g: Multigraph, pair) -> str:
    return " ".join(str(g.vertices.index(v) + 1) for v in pair)


def cmd_verify_pd(args) -> int:
    gf = formats.parse_graph_file(_read(args.graph))
    coloring = gf.edge_coloring or EdgeColoring.constant(gf.graph, 1)
    check = is_proper_disconnected(gf.graph, coloring)
    if check:
        print("proper disconnected: yes")
        return OK
    print(f"proper disconnected: no (pair {_pair_text(gf.graph, check.failing_pair)})")
    return NEGATIVE


def cmd_verify_rvd(args) -> int:
    gf = formats.parse_graph_file(_read(args.graph))
    if gf.vertex_coloring is None:
        raise GraphError("graph file has no 'c vertexcolor' lines")
    check = is_rainbow_vertex_disconnected(gf.graph, gf.vertex_coloring)
    if check:
        print("rainbow vertex-disconnected: yes")
        return OK
    print(f"rainbow vertex-disconnected: no (pair {_pair_text(gf.graph, check.failing_pair)})")
    return NEGATIVE


def cmd_matching_cut(args) -> int:
    gf = formats.parse_graph_file(_read(args.graph))
    x, y = _terminals(args, gf)
    if args.casework:
        built = matching_cut_indep_deg3(gf.graph, x, y)
        cert = built.certificate
        print(f"case: {built.case}{' (fallback)' if built.fallback else ''}")
    else:
        cert = find_matching_cut(gf.graph, x, y)
    if cert is None:
        print("matching cut: none")
        return NEGATIVE
    print(f"matching cut edges: {_edge_numbers(gf.graph, cert.cut)}")
    return OK


def cmd_color_deg3(args) -> int:
    gf = formats.parse_graph_file(_read(args.graph))
    coloring, trace = color_max_deg3(gf.graph)
    print(f"colors used: {len(coloring.used())} ({len(trace.steps)} construction steps)")
    _save(args, formats.emit_edge_list(gf.graph, coloring))
    _write_dot(args, formats.emit_dot(gf.graph, coloring))
    return OK


def cmd_classify(args) -> int:
    gf = formats.parse_graph_file(_read(args.graph))
    res = classify_indep_deg3(gf.graph)
    if res.value == 2:
        print(f"pd = 2 ({res.pattern} on vertices {_pair_text(gf.graph, res.witness)})")
    else:
        print(f"pd = 1 ({len(res.certificates)} pair certificates, {res.fallbacks} by fallback)")
    return OK


def cmd_reduce(args) -> int:
    if args.kind == "star4cycle":
        g = formats.parse_graph_file(_read(args.input)).graph
        art = edge_to_4cycle(g)
    else:
        phi = formats.parse_dimacs(_read(args.input))
        if args.kind == "nae":
            art = build_Hphi_prime(phi) if not args.raw else build_Gphi_nae(phi)
        elif args.kind == "pad":
            art = pad_with_path(build_Hphi_prime(phi), args.k)
        else:
            art = build_rvd_variant(phi, args.kind.removeprefix("rvd-"))
    print(f"{art.kind}: {art.graph.n} vertices, {art.graph.m} edges, max degree {art.graph.max_degree()}", file=sys.stderr)
    _write(args, formats.emit_artifact(art))
    _write_dot(args, formats.emit_artifact_dot(art))
    return OK


def cmd_xcheck(args) -> int:
    config = RunConfig(args.budget_edges, args.budget_vertices, seed=args.seed)
    formulas = []
    for path in args.cnf:
        formulas.append(formats.parse_dimacs(_read(path)))
    if args.exhaustive:
        n, m = args.exhaustive
        formulas.extend(all_cnf(n, m))
    if args.random:
        formulas.extend(gen_instances("random-cnf", {"n": args.n, "m": args.m, "count": args.random}, args.seed))
    if not formulas:
        raise GraphError("no formulas given")
    reductions = ["nae", "rvd-base", "rvd-deg3", "rvd-bipartite"] if args.reduction == "all" else [args.reduction]
    reports = []
    for phi in formulas:
        for red in reductions:
            if red == "nae":
                reports.append(xcheck_nae(phi, config))
            elif red == "pad":
                reports.append(xcheck_pad(phi, args.k, config))
            else:
                reports.append(xcheck_sat_rvd(phi, red.removeprefix("rvd-"), config))
    lines = [r.summary() for r in reports]
    bad = sum(not r.ok for r in reports)
    lines.append(f"{len(reports) - bad}/{len(reports)} checks agree")
    _write(args, "\n".join(lines) + "\n")
    return OK if not bad else FAILED


def cmd_gen(args) -> int:
    params = {"count": args.count}
    for key in ("n", "m", "pattern", "random", "max_edges"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    chunks = []
    for item in gen_instances(args.kind, params, args.seed):
        chunks.append(formats.emit_dimacs(item) if args.kind == "random-cnf" else formats.emit_edge_list(item))
    _write(args, "\n".join(chunks))
    return OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget-edges", type=int, default=16)
    common.add_argument("--budget-vertices", type=int, default=8)
    common.add_argument("--out", help="write the main output here instead of stdout")
    common.add_argument("--dot", help="also write a DOT rendering here")

    p = argparse.ArgumentParser(prog="colordisconnect", description="Colored disconnection of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("graph", help="edge-list file, or - for stdin")
        sp.set_defaults(func=func)
        return sp

    graph_cmd("pd", cmd_pd, "exact proper disconnection number")
    graph_cmd("rvd", cmd_rvd, "exact rainbow vertex-disconnection number")
    graph_cmd("verify-pd", cmd_verify_pd, "check an edge coloring")
    graph_cmd("verify-rvd", cmd_verify_rvd, "check a vertex coloring")
    mc = graph_cmd("matching-cut", cmd_matching_cut, "matching cut between two vertices")
    mc.add_argument("x", nargs="?", help="1-based vertex number or label")
    mc.add_argument("y", nargs="?")
    mc.add_argument("--casework", action="store_true", help="use the independent-degree-3 construction")
    graph_cmd("color-deg3", cmd_color_deg3, "two-coloring for maximum degree three")
    graph_cmd("classify", cmd_classify, "pd of an independent-degree-3 graph")

    red = sub.add_parser("reduce", parents=[common], help="build a reduction graph")
    red.add_argument("kind", choices=["nae", "rvd-base", "rvd-deg3", "rvd-bipartite", "star4cycle", "pad"])
    red.add_argument("input", help="DIMACS file (graph file for star4cycle), or -")
    red.add_argument("--k", type=int, default=2, help="path order for pad")
    red.add_argument("--raw", action="store_true", help="nae: emit the parallel-edge graph before simplification")
    red.set_defaults(func=cmd_reduce)

    xc = sub.add_parser("xcheck", parents=[common], help="cross-check reductions against brute force")
    xc.add_argument("cnf", nargs="*", help="DIMACS files")
    xc.add_argument("--reduction", default="all", choices=["all", "nae", "pad", "rvd-base", "rvd-deg3", "rvd-bipartite"])
    xc.add_argument("--exhaustive", type=int, nargs=2, metavar=("N", "M"), help="every formula with N variables and M clauses")
    xc.add_argument("--random", type=int, default=0, metavar="COUNT")
    xc.add_argument("--n", type=int, default=3)
    xc.add_argument("--m", type=int, default=2)
    xc.add_argument("--k", type=int, default=2)
    xc.set_defaults(func=cmd_xcheck)

    gen = sub.add_parser("gen", parents=[common], help="generate instances")
    gen.add_argument("kind", choices=["random-cnf", "random-connected-graph", "cubic-catalog", "indep-deg3-class"])
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--n", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--pattern", choices=["none", "triangle", "K23"])
    gen.add_argument("--random", type=int, help="cubic-catalog: number of random cubic graphs to append")
    gen.add_argument("--max-edges", type=int)
    gen.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return REFUSED
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return FAILED
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return REFUSED


if __name__ == "__main__":
    sys.exit(main())
