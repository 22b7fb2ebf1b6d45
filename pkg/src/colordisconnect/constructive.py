"""Two-color proper disconnection colorings for graphs of maximum degree three,
and explicit matching cuts for the independent-degree-3 class.

Every public routine verifies its own output before returning it, so a
flaw in the casework surfaces as :class:`VerificationError` rather than a
wrong coloring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cuts import MATCHING, EdgeColoring, EdgeCutCertificate, find_matching_cut, verify_matching_cut
from .graph import (
    GraphBuilder,
    GraphError,
    Multigraph,
    bridges,
    find_pattern,
    is_connected,
    is_tree,
    perfect_matching,
    reachable,
    strip_pendants,
)
from .solvers import VerificationError, is_proper_disconnected


@dataclass(frozen=True)
class HGadget:
    graph: Multigraph
    key_vertex: int


@dataclass(frozen=True)
class TraceStep:
    op: str
    vertices: tuple[int, ...] = ()
    edges: tuple[int, ...] = ()
    color: int | None = None


@dataclass
class ConstructionTrace:
    steps: list[TraceStep] = field(default_factory=list)
    coloring: EdgeColoring | None = None

    def add(self, op: str, vertices=(), edges=(), color: int | None = None) -> None:
        self.steps.append(TraceStep(op, tuple(vertices), tuple(edges), color))

    def replay(self, edge_ids=None) -> dict[int, int]:
        """Apply every coloring step in order; optionally keep only ``edge_ids``."""
        out: dict[int, int] = {}
        for step in self.steps:
            if step.color is not None:
                for e in step.edges:
                    out[e] = step.color
        if edge_ids is not None:
            keep = set(edge_ids)
            out = {e: c for e, c in out.items() if e in keep}
        return out


class _Ids:
    """Fresh vertex and edge ids that never collide with the input graph."""

    def __init__(self, g: Multigraph):
        self.v = itertools.count(g.max_vertex_id() + 1)
        self.e = itertools.count(g.max_edge_id() + 1)


def h_gadget(key: int = 4, first: int = 0) -> HGadget:
    """K4 with one edge subdivided; the subdivision vertex is the key vertex."""
    b = GraphBuilder()
    q = [b.add_vertex(vid=first + i) for i in range(4)]
    k = b.add_vertex("key", vid=first + key)
    for i, j in ((0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
        b.add_edge(q[i], q[j])
    b.add_edge(q[0], k)
    b.add_edge(k, q[1])
    return HGadget(b.build(), k)


# -- cubic graphs ----------------------------------------------------------


def _require_cubic(g: Multigraph) -> None:
    if not g.is_simple():
        raise GraphError("graph must be simple")
    if any(g.degree(v) != 3 for v in g.vertices):
        raise GraphError("graph must be 3-regular")
    if not is_connected(g):
        raise GraphError("graph must be connected")


def _prism_coloring(g: Multigraph) -> dict[int, int] | None:
    """Stored coloring of two triangles joined by a perfect matching.

    Within each triangle t0 t1 t2 (and its rung partners s0 s1 s2) the edge
    t0 t2 gets color 2; every other edge gets color 1. This is one of the
    colorings found by exhausting all 2-colorings of the prism.
    """
    if g.n != 6:
        return None
    tri = find_pattern(g, "triangle")
    if tri is None:
        return None
    t = sorted(tri)
    partner = {}
    for v in t:
        outside = [w for w in g.neighbors(v) if w not in t]
        if len(outside) != 1:
            return None
        partner[v] = outside[0]
    s = [partner[v] for v in t]
    if len(set(s)) != 3 or not all(g.adjacent(a, b) for a, b in itertools.combinations(s, 2)):
        return None
    colors = {eid: 1 for eid in g.edge_ids}
    colors[g.edges_between(t[0], t[2])[0]] = 2
    colors[g.edges_between(s[0], s[2])[0]] = 2
    return colors


def _bridgeless_colors(g: Multigraph, trace: ConstructionTrace) -> dict[int, int]:
    prism = _prism_coloring(g)
    if prism is not None:
        for c in (1, 2):
            trace.add("prism", edges=sorted(e for e, col in prism.items() if col == c), color=c)
        return prism
    matching = perfect_matching(g)
    if matching is None:
        raise VerificationError("bridgeless cubic graph without a perfect matching")
    colors = {eid: 1 for eid in g.edge_ids}
    for eid in matching:
        colors[eid] = 2
    trace.add("perfect-matching", edges=sorted(matching), color=2)
    rest = g.without_edges(matching)
    for e in rest.edges:
        if colors[e.id] != 1:
            continue
        common = set(rest.neighbors(e.u)) & set(rest.neighbors(e.v))
        if not common:
            continue
        tri_edges = [e.id, *rest.edges_between(e.u, min(common)), *rest.edges_between(e.v, min(common))]
        if all(colors[t] == 1 for t in tri_edges):
            colors[min(tri_edges)] = 2
            trace.add("triangle", vertices=(e.u, e.v, min(common)), edges=(min(tri_edges),), color=2)
    trace.add("remaining", edges=sorted(e for e, c in colors.items() if c == 1), color=1)
    return colors


def _color_piece(h: Multigraph, u: int, ids: _Ids, trace: ConstructionTrace) -> dict[int, int]:
    """Color H(u): one degree-2 vertex ``u``, all others of degree 3."""
    (u1, e_u1), (u2, e_u2) = h.incident(u)
    if h.adjacent(u1, u2):
        # H1 case: replace u by a diamond and recurse
        e2 = h.edges_between(u1, u2)[0]
        e1 = next(eid for w, eid in h.incident(u1) if w not in (u, u2))
        e3 = next(eid for w, eid in h.incident(u2) if w not in (u, u1))
        b = GraphBuilder(h.without_edges([e_u1, e_u2]).without_vertices([u]))
        b.reserve(0, 0)
        d = [b.add_vertex(vid=next(ids.v)) for _ in range(4)]
        new_edges = [b.add_edge(d[i], d[j], eid=next(ids.e)) for i, j in ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3))]
        new_edges.append(b.add_edge(d[0], u1, eid=next(ids.e)))
        new_edges.append(b.add_edge(d[3], u2, eid=next(ids.e)))
        trace.add("diamond", vertices=(u, u1, u2, *d), edges=new_edges)
        sub = _color_cubic(b.build(), ids, trace)
        c1, c2, c3 = sub[e1], sub[e2], sub[e3]
        if c1 == c2:
            col_u1, col_u2, case = 3 - c1, c1, "H1-case1"
        elif c2 == c3:
            col_u1, col_u2, case = c3, 3 - c3, "H1-case1"
        else:
            col_u1, col_u2, case = c2, c1, "H1-case2"
    else:
        # H2 case: contract the path u1 u u2 to an edge and recurse
        b = GraphBuilder(h.without_edges([e_u1, e_u2]).without_vertices([u]))
        short = b.add_edge(u1, u2, eid=next(ids.e))
        trace.add("shortcut", vertices=(u, u1, u2), edges=(short,))
        sub = _color_cubic(b.build(), ids, trace)
        col_u1, col_u2, case = 1, 2, "H2"
    colors = {eid: sub[eid] for eid in h.edge_ids if eid not in (e_u1, e_u2)}
    colors[e_u1] = col_u1
    colors[e_u2] = col_u2
    trace.add(case, vertices=(u, u1), edges=(e_u1,), color=col_u1)
    trace.add(case, vertices=(u, u2), edges=(e_u2,), color=col_u2)
    return colors


def _color_cubic(g: Multigraph, ids: _Ids, trace: ConstructionTrace) -> dict[int, int]:
    cut_edges = sorted(bridges(g))
    if not cut_edges:
        return _bridgeless_colors(g, trace)
    bridge = g.edge(cut_edges[0])
    u, v = bridge.u, bridge.v
    trace.add("split-bridge", vertices=(u, v), edges=(bridge.id,))
    h = g.without_edges([bridge.id])
    side_u = reachable(h, u)
    colors: dict[int, int] = {}
    colors.update(_color_piece(h.subgraph(side_u), u, ids, trace))
    colors.update(_color_piece(h.subgraph(set(h.vertices) - side_u), v, ids, trace))
    colors[bridge.id] = 1
    trace.add("bridge", vertices=(u, v), edges=(bridge.id,), color=1)
    return colors


def _finish(g: Multigraph, colors: dict[int, int], trace: ConstructionTrace) -> tuple[EdgeColoring, ConstructionTrace]:
    coloring = EdgeColoring(max(colors.values(), default=1), colors)
    if len(coloring.used()) > 2:
        raise VerificationError("construction used more than two colors")
    check = is_proper_disconnected(g, coloring)
    if not check:
        raise VerificationError(f"constructed coloring fails at pair {check.failing_pair}")
    trace.coloring = coloring
    return coloring, trace


def color_3regular_bridgeless(g: Multigraph) -> tuple[EdgeColoring, ConstructionTrace]:
    """Two-coloring from a perfect matching (stored coloring for the prism)."""
    _require_cubic(g)
    if bridges(g):
        raise GraphError("graph must be bridgeless")
    trace = ConstructionTrace()
    return _finish(g, _bridgeless_colors(g, trace), trace)


def color_3regular(g: Multigraph) -> tuple[EdgeColoring, ConstructionTrace]:
    """Two-coloring of any connected cubic graph, splitting at bridges."""
    _require_cubic(g)
    trace = ConstructionTrace()
    colors = _color_cubic(g, _Ids(g), trace)
    return _finish(g, {e: colors[e] for e in g.edge_ids}, trace)


def color_max_deg3(g: Multigraph) -> tuple[EdgeColoring, ConstructionTrace]:
    """Two-coloring of a connected graph with maximum degree at most three.

    Pendant edges are stripped, every degree-2 vertex of the core receives an
    :func:`h_gadget` to make it cubic, and the cubic coloring is restricted
    back. Stripped pendant edges get color 1.
    """
    if not g.is_simple():
        raise GraphError("graph must be simple")
    if not is_connected(g) or g.n < 2:
        raise GraphError("graph must be connected and nontrivial")
    if g.max_degree() > 3:
        raise GraphError("maximum degree exceeds three")
    trace = ConstructionTrace()
    if is_tree(g):
        trace.add("tree", edges=g.edge_ids, color=1)
        return _finish(g, {e: 1 for e in g.edge_ids}, trace)
    core, removed = strip_pendants(g)
    trace.add("strip-pendants", vertices=[v for v, _ in removed], edges=[e for _, e in removed])
    ids = _Ids(g)
    b = GraphBuilder(core)
    for u in core.vertices:
        if core.degree(u) != 2:
            continue
        gadget = h_gadget()
        remap = {w: b.add_vertex(vid=next(ids.v)) for w in gadget.graph.vertices}
        new_edges = [b.add_edge(remap[e.u], remap[e.v], eid=next(ids.e)) for e in gadget.graph.edges]
        new_edges.append(b.add_edge(remap[gadget.key_vertex], u, eid=next(ids.e)))
        trace.add("attach-gadget", vertices=(u, *remap.values()), edges=new_edges)
    cubic = b.build()
    colors = _color_cubic(cubic, ids, trace)
    out = {e: colors[e] for e in core.edge_ids}
    for _, eid in removed:
        out[eid] = 1
    trace.add("restrict", edges=core.edge_ids)
    trace.add("pendant", edges=[e for _, e in removed], color=1)
    return _finish(g, out, trace)


# -- the independent-degree-3 class -----------------------------------------


def in_indep_deg3_class(g: Multigraph, exact_delta: bool = True) -> bool:
    """Simple, connected, maximum degree three, degree-3 vertices independent."""
    if not g.is_simple() or not is_connected(g):
        return False
    delta = g.max_degree()
    if delta > 3 or (exact_delta and delta != 3):
        return False
    return not any(g.degree(e.u) == 3 and g.degree(e.v) == 3 for e in g.edges)


@dataclass(frozen=True)
class MatchingCutConstruction:
    certificate: EdgeCutCertificate
    case: str
    fallback: bool


def _other(g: Multigraph, v: int, *excluded: int) -> int | None:
    return next((w for w in g.neighbors(v) if w not in excluded), None)


def _edge(g: Multigraph, a: int | None, b: int | None) -> list[int]:
    if a is None or b is None:
        return []
    return g.edges_between(a, b)[:1]


def _degree3_case(g: Multigraph, x: int, y: int) -> tuple[list[int], str]:
    nbrs = g.neighbors(x)
    s = {w: _other(g, w, x) for w in nbrs}

    def private(w: int) -> bool:
        return s[w] is None or all(s[w] != s[o] for o in nbrs if o != w)

    x1 = next(w for w in nbrs if private(w))
    x2, x3 = [w for w in nbrs if w != x1]
    if not g.adjacent(x, y):
        return _edge(g, x1, s[x1]) + _edge(g, x2, s[x2]) + _edge(g, x, x3), "deg3-nonadjacent"
    xy = g.edges_between(x, y)
    if y == x2:
        return _edge(g, x1, s[x1]) + xy + _edge(g, x3, s[x3]), "deg3-adjacent"
    if y == x3:
        return _edge(g, x1, s[x1]) + xy + _edge(g, x2, s[x2]), "deg3-adjacent"
    if s[x2] is not None and s[x2] == s[x3]:
        p1 = _other(g, s[x2], x2, x3)
        return xy + _edge(g, s[x2], p1), "deg3-shared"
    return xy + _edge(g, x2, s[x2]) + _edge(g, x3, s[x3]), "deg3-private"


def _deg2_nonadjacent(g: Multigraph, x: int, y: int) -> tuple[list[int], str]:
    x1, x2 = g.neighbors(x)
    if g.degree(x1) != 2 and g.degree(x2) == 2:
        x1, x2 = x2, x1
    if g.degree(x1) == 1:
        return _edge(g, x, x2), "deg2-leaf-neighbour"
    if g.degree(x1) == 2:
        return _edge(g, x, x2) + _edge(g, x1, _other(g, x1, x)), "deg2-light"
    if g.degree(x2) == 1:
        return _edge(g, x, x1), "deg2-leaf-neighbour"
    ua, ub = [w for w in g.neighbors(x1) if w != x]
    va, vb = [w for w in g.neighbors(x2) if w != x]
    shared = sorted({ua, ub} & {va, vb})
    if shared:
        c = shared[0]
        u2 = ub if ua == c else ua
        v2 = vb if va == c else va
        w = _other(g, u2, x1)
        q = _other(g, v2, x2)
        if y != v2:
            return _edge(g, x, x1) + _edge(g, x2, c) + _edge(g, v2, q), "deg2-heavy-shared"
        return _edge(g, x, x2) + _edge(g, x1, c) + _edge(g, u2, w), "deg2-heavy-shared"
    w = _other(g, ua, x1)
    q = _other(g, ub, x1)
    if y == ua:
        return _edge(g, x, x2) + _edge(g, x1, ua) + _edge(g, ub, q), "deg2-heavy-disjoint"
    return _edge(g, x, x2) + _edge(g, x1, ub) + _edge(g, ua, w), "deg2-heavy-disjoint"


def _casework(g: Multigraph, x: int, y: int, depth: int = 0) -> tuple[list[int], str] | None:
    dx, dy = g.degree(x), g.degree(y)
    if dx == 1:
        return g.incident_edges(x), "leaf"
    if dy == 1:
        return g.incident_edges(y), "leaf"
    if dx == 3:
        return _degree3_case(g, x, y)
    if dy == 3:
        return _degree3_case(g, y, x)
    if g.adjacent(x, y):
        xy = g.edges_between(x, y)
        rest = g.without_edges(xy)
        if y not in reachable(rest, x):
            return xy, "deg2-bridge"
        x1 = _other(g, x, y)
        y1 = _other(g, y, x)
        if x1 is None or y1 is None or x1 == y1 or depth > g.n:
            return None
        inner = _casework(g.without_vertices([x, y]), x1, y1, depth + 1)
        if inner is None:
            return None
        return inner[0] + xy, "deg2-adjacent/" + inner[1]
    return _deg2_nonadjacent(g, x, y)


def _require_indep_class(g: Multigraph) -> None:
    if not in_indep_deg3_class(g):
        raise GraphError("graph must be simple, connected, with max degree 3 and independent degree-3 vertices")


def matching_cut_indep_deg3(g: Multigraph, x: int, y: int) -> MatchingCutConstruction:
    """An x-y matching cut built from the degree casework.

    The result is always re-verified. If the casework leaves a gap the exact
    finder is used instead and ``fallback`` is set.
    """
    _require_indep_class(g)
    if find_pattern(g, "triangle") or find_pattern(g, "K23"):
        raise GraphError("graph contains a triangle or K_{2,3}")
    if x == y or x not in g or y not in g:
        raise GraphError("terminals must be two distinct vertices of the graph")
    built = _casework(g, x, y)
    if built is not None:
        cert = EdgeCutCertificate((x, y), frozenset(built[0]), MATCHING)
        if verify_matching_cut(g, cert):
            return MatchingCutConstruction(cert, built[1], False)
    cert = find_matching_cut(g, x, y)
    if cert is None:
        raise VerificationError(f"no matching cut between {x} and {y} in a triangle- and K23-free graph")
    return MatchingCutConstruction(cert, built[1] if built else "gap", True)


@dataclass
class Classification:
    value: int
    witness: tuple[int, ...] | None = None
    pattern: str | None = None
    certificates: dict[tuple[int, int], EdgeCutCertificate] = field(default_factory=dict)
    fallbacks: int = 0


def classify_indep_deg3(g: Multigraph) -> Classification:
    """pd = 2 with a triangle or K_{2,3} witness, else pd = 1 with matching cuts."""
    _require_indep_class(g)
    for pattern in ("triangle", "K23"):
        witness = find_pattern(g, pattern)
        if witness is not None:
            return Classification(2, witness, pattern)
    out = Classification(1)
    for x, y in itertools.combinations(g.vertices, 2):
        built = matching_cut_indep_deg3(g, x, y)
        out.certificates[(x, y)] = built.certificate
        out.fallbacks += built.fallback
    return out
