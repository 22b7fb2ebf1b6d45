"""Text formats: DIMACS CNF, the edge-list graph format and DOT.

Edge-list format (1-based ids)::

    p graph <n> <m>
    <u> <v>                      one line per edge, edge ids follow line order
    c edgecolor <e> <k>          optional
    c vertexcolor <v> <k>        optional
    c terminal <name> <v>        optional, e.g. ``c terminal u 3``
    c label <v> <name>           optional vertex label

Other lines starting with ``c`` are comments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .cuts import EdgeColoring, VertexColoring
from .graph import GraphError, Multigraph
from .reductions import CnfFormula, ReductionArtifact


class FormatError(ValueError):
    """Malformed input text."""


# -- DIMACS ----------------------------------------------------------------


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(f"line {lineno}: bad header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise FormatError(f"line {lineno}: bad header {line!r}") from None
            continue
        if header is None:
            raise FormatError(f"line {lineno}: clause before the header")
        try:
            tokens.extend(int(tok) for tok in line.split())
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer literal") from None
    if header is None:
        raise FormatError("missing 'p cnf' header")
    n, m = header
    clauses: list[list[int]] = []
    current: list[int] = []
    for tok in tokens:
        if tok == 0:
            clauses.append(current)
            current = []
            continue
        if abs(tok) > n:
            raise FormatError(f"literal {tok} out of range for {n} variables")
        current.append(tok)
    if current:
        raise FormatError("last clause is not terminated by 0")
    if len(clauses) != m:
        raise FormatError(f"header declares {m} clauses, found {len(clauses)}")
    for c in clauses:
        if len(c) != 3:
            raise FormatError(f"clause {c} does not have exactly three literals")
    try:
        return CnfFormula.from_ints(n, clauses)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def emit_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.n} {phi.m}"]
    lines += [" ".join(str(x) for x in c) + " 0" for c in phi.to_ints()]
    return "\n".join(lines) + "\n"


# -- edge lists ------------------------------------------------------------


@dataclass
class GraphFile:
    graph: Multigraph
    edge_coloring: EdgeColoring | None = None
    vertex_coloring: VertexColoring | None = None
    terminals: dict[str, int] = field(default_factory=dict)

    def terminal_pair(self) -> tuple[int, int] | None:
        if len(self.terminals) < 2:
            return None
        a, b = list(self.terminals.values())[:2]
        return a, b


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_graph_file(text: str) -> GraphFile:
    header = None
    pairs: list[tuple[int, int]] = []
    ecolors: dict[int, int] = {}
    vcolors: dict[int, int] = {}
    terminals: dict[str, int] = {}
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue
        if parts[0] == "p":
            if header is not None or len(parts) != 4 or parts[1] != "graph":
                raise FormatError(f"line {lineno}: bad header {raw.strip()!r}")
            header = (_int(parts[2], lineno), _int(parts[3], lineno))
            continue
        if parts[0] == "c":
            if len(parts) == 4 and parts[1] == "edgecolor":
                ecolors[_int(parts[2], lineno) - 1] = _int(parts[3], lineno)
            elif len(parts) == 4 and parts[1] == "vertexcolor":
                vcolors[_int(parts[2], lineno) - 1] = _int(parts[3], lineno)
            elif len(parts) == 4 and parts[1] == "terminal":
                terminals[parts[2]] = _int(parts[3], lineno) - 1
            elif len(parts) == 4 and parts[1] == "label":
                labels[_int(parts[2], lineno) - 1] = parts[3]
            continue
        if header is None:
            raise FormatError(f"line {lineno}: edge before the header")
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        pairs.append((_int(parts[0], lineno) - 1, _int(parts[1], lineno) - 1))
    if header is None:
        raise FormatError("missing 'p graph' header")
    n, m = header
    if len(pairs) != m:
        raise FormatError(f"header declares {m} edges, found {len(pairs)}")
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u + 1}, {v + 1}) has an endpoint outside 1..{n}")
    for what, ids, bound in (("edge", ecolors, m), ("vertex", vcolors, n), ("terminal", terminals.values(), n)):
        for i in ids:
            if not 0 <= i < bound:
                raise FormatError(f"{what} id {i + 1} out of range")
    try:
        g = Multigraph(range(n), [(i, u, v) for i, (u, v) in enumerate(pairs)], labels)
        ec = EdgeColoring.from_colors(ecolors) if ecolors else None
        vc = VertexColoring.from_colors(vcolors) if vcolors else None
    except (GraphError, ValueError) as exc:
        raise FormatError(str(exc)) from None
    return GraphFile(g, ec, vc, terminals)


def parse_edge_list(text: str) -> Multigraph:
    return parse_graph_file(text).graph


def _dense(g: Multigraph) -> tuple[dict[int, int], dict[int, int]]:
    vmap = {v: i + 1 for i, v in enumerate(g.vertices)}
    emap = {e: i + 1 for i, e in enumerate(g.edge_ids)}
    return vmap, emap


def emit_edge_list(
    g: Multigraph,
    edge_coloring: EdgeColoring | None = None,
    vertex_coloring: VertexColoring | None = None,
    terminals: dict[str, int] | None = None,
    labels: bool = True,
) -> str:
    """Serialize ``g``; vertex and edge ids are renumbered densely from 1."""
    vmap, emap = _dense(g)
    lines = [f"p graph {g.n} {g.m}"]
    lines += [f"{vmap[e.u]} {vmap[e.v]}" for e in g.edges]
    if labels:
        lines += [f"c label {vmap[v]} {lab}" for v, lab in sorted(g.labels.items()) if " " not in lab]
    if edge_coloring is not None:
        lines += [f"c edgecolor {emap[e]} {edge_coloring[e]}" for e in g.edge_ids]
    if vertex_coloring is not None:
        lines += [f"c vertexcolor {vmap[v]} {vertex_coloring[v]}" for v in g.vertices]
    for name, v in (terminals or {}).items():
        lines.append(f"c terminal {name} {vmap[v]}")
    return "\n".join(lines) + "\n"


def artifact_terminals(art: ReductionArtifact) -> dict[str, int]:
    if art.terminals is None:
        return {}
    names = ("s", "t") if art.vertex_coloring is not None else ("u", "v")
    return dict(zip(names, art.terminals))


def emit_artifact(art: ReductionArtifact) -> str:
    return emit_edge_list(art.graph, art.edge_coloring, art.vertex_coloring, artifact_terminals(art))


# -- DOT -------------------------------------------------------------------

_PALETTE = ["black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta", "gray"]


def _dot_color(k: int) -> str:
    return _PALETTE[(k - 1) % len(_PALETTE)]


def emit_dot(
    g: Multigraph,
    edge_coloring: EdgeColoring | None = None,
    vertex_coloring: VertexColoring | None = None,
    terminals: dict[str, int] | None = None,
) -> str:
    """DOT text with 1-based ids; colorings are kept as ``ecolor``/``vcolor``
    attributes (and drawn with a palette) so :func:`parse_dot` can read them back."""
    vmap, _ = _dense(g)
    term = {v: name for name, v in (terminals or {}).items()}
    lines = ["graph G {"]
    for v in g.vertices:
        attrs = []
        if g.label(v) is not None:
            attrs.append(f'label="{g.label(v)}"')
        if vertex_coloring is not None:
            k = vertex_coloring[v]
            attrs.append(f'vcolor={k} style=filled fillcolor="{_dot_color(k)}"')
        if v in term:
            attrs.append(f'terminal="{term[v]}" shape=doublecircle')
        lines.append(f"  {vmap[v]} [{' '.join(attrs)}];" if attrs else f"  {vmap[v]};")
    for e in g.edges:
        attr = ""
        if edge_coloring is not None:
            k = edge_coloring[e.id]
            attr = f' [ecolor={k} color="{_dot_color(k)}"]'
        lines.append(f"  {vmap[e.u]} -- {vmap[e.v]}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_artifact_dot(art: ReductionArtifact) -> str:
    return emit_dot(art.graph, art.edge_coloring, art.vertex_coloring, artifact_terminals(art))


_NODE = re.compile(r"^\s*(\d+)\s*(?:\[(.*)\])?\s*;\s*$")
_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*(?:\[(.*)\])?\s*;\s*$")
_ATTR = re.compile(r'(\w+)=("[^"]*"|\S+)')


def _attrs(text: str | None) -> dict[str, str]:
    return {k: v.strip('"') for k, v in _ATTR.findall(text or "")}


def parse_dot(text: str) -> GraphFile:
    """Read back the DOT subset written by :func:`emit_dot`."""
    nodes: dict[int, dict[str, str]] = {}
    edges: list[tuple[int, int, dict[str, str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line in ("}",) or line.startswith("graph"):
            continue
        m = _EDGE.match(line)
        if m:
            edges.append((int(m.group(1)) - 1, int(m.group(2)) - 1, _attrs(m.group(3))))
            continue
        m = _NODE.match(line)
        if m:
            nodes[int(m.group(1)) - 1] = _attrs(m.group(2))
            continue
        raise FormatError(f"line {lineno}: unrecognised DOT statement {line!r}")
    labels = {v: a["label"] for v, a in nodes.items() if "label" in a}
    try:
        g = Multigraph(nodes, [(i, u, v) for i, (u, v, _) in enumerate(edges)], labels)
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    ecolors = {i: int(a["ecolor"]) for i, (_, _, a) in enumerate(edges) if "ecolor" in a}
    vcolors = {v: int(a["vcolor"]) for v, a in nodes.items() if "vcolor" in a}
    terminals = {a["terminal"]: v for v, a in nodes.items() if "terminal" in a}
    return GraphFile(
        g,
        EdgeColoring.from_colors(ecolors) if ecolors else None,
        VertexColoring.from_colors(vcolors) if vcolors else None,
        terminals,
    )
