"""CNF formulas compiled into hardness gadget graphs, plus the structural
transforms those constructions rely on.

Every builder returns a :class:`ReductionArtifact` whose ``trace`` maps
formula variables and clauses back to vertex ids, so certificates found in
the graph can be read back as truth assignments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .cuts import (
    MATCHING,
    EdgeColoring,
    EdgeCutCertificate,
    VertexColoring,
    VertexCutCertificate,
    matching_cut_side,
    verify_matching_cut,
    verify_rainbow_vertex_cut,
)
from .graph import GraphBuilder, GraphError, Multigraph, is_connected
from .solvers import VerificationError

Literal = tuple[int, bool]


@dataclass(frozen=True)
class CnfFormula:
    """Conjunction of three-literal clauses over variables ``1..n``.

    A literal is ``(variable, polarity)``; polarity ``False`` means negated.
    Clause positions matter: the k-th literal of a clause is wired to the
    k-th slot of its gadget.
    """

    n: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a formula needs at least one variable")
        clauses = tuple(tuple((int(v), bool(p)) for v, p in c) for c in self.clauses)
        for c in clauses:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have exactly three literals")
            for v, _ in c:
                if not 1 <= v <= self.n:
                    raise ValueError(f"variable {v} outside [1, {self.n}]")
        object.__setattr__(self, "clauses", clauses)

    @classmethod
    def from_ints(cls, n: int, clauses: Iterable[Sequence[int]]) -> "CnfFormula":
        """DIMACS-style signed integers, e.g. ``[[1, -2, 2]]``."""
        return cls(n, tuple(tuple((abs(x), x > 0) for x in c) for c in clauses))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def to_ints(self) -> list[list[int]]:
        return [[v if p else -v for v, p in c] for c in self.clauses]

    def literal_values(self, clause: Sequence[Literal], values: Mapping[int, bool]) -> list[bool]:
        return [values[v] == p for v, p in clause]

    def satisfied_by(self, values: Mapping[int, bool]) -> bool:
        return all(any(self.literal_values(c, values)) for c in self.clauses)

    def nae_satisfied_by(self, values: Mapping[int, bool]) -> bool:
        return all(len(set(self.literal_values(c, values))) == 2 for c in self.clauses)


@dataclass(frozen=True)
class Assignment:
    values: Mapping[int, bool] = field(hash=False)
    unconstrained: frozenset[int] = frozenset()

    def __getitem__(self, var: int) -> bool:
        return self.values[var]

    def as_tuple(self) -> tuple[bool, ...]:
        return tuple(self.values[v] for v in sorted(self.values))


@dataclass
class ReductionArtifact:
    kind: str
    graph: Multigraph
    formula: CnfFormula | None = None
    terminals: tuple[int, int] | None = None
    edge_coloring: EdgeColoring | None = None
    vertex_coloring: VertexColoring | None = None
    trace: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.terminals is not None:
            for t in self.terminals:
                if t not in self.graph:
                    raise GraphError(f"terminal {t} is not in the graph")


@dataclass(frozen=True)
class DecodedAssignment:
    assignment: Assignment
    satisfies: bool


# -- NAE-3-SAT to u-v matching cut ----------------------------------------


def _lit_label(var: int, polarity: bool) -> str:
    return f"x{var}" if polarity else f"~x{var}"


def build_Gphi_nae(phi: CnfFormula) -> ReductionArtifact:
    """The parallel-edge gadget graph for a NAE-3-SAT instance.

    Two chains ``a_1..a_N`` and ``b_1..b_N`` with ``N = n + 2m`` are linked by
    parallel pairs between consecutive positions. Variable ``j`` owns
    position ``j`` through the 4-cycle ``a_j x_j b_j ~x_j``. Clause ``i`` owns
    positions ``n+2i-1`` and ``n+2i``: squares ``a l1 b p`` and ``a' l3 b' q``,
    pairs ``p=h`` and ``q=h'``, and simple edges ``h l2`` and ``h' l2``.
    Every literal occurrence vertex is paired with its literal vertex.

    In any matching cut with the a-chain on one side and the b-chain on the
    other, ``x_j`` and ``~x_j`` fall on opposite sides and the three occurrence
    vertices of a clause cannot all share a side.
    """
    n, m = phi.n, phi.m
    length = n + 2 * m
    b = GraphBuilder()
    a = [None] + [b.add_vertex(f"a{i}") for i in range(1, length + 1)]
    bb = [None] + [b.add_vertex(f"b{i}") for i in range(1, length + 1)]
    lit: dict[Literal, int] = {}
    variables: dict[int, dict[str, int]] = {}
    for j in range(1, n + 1):
        lit[(j, True)] = b.add_vertex(_lit_label(j, True))
        lit[(j, False)] = b.add_vertex(_lit_label(j, False))
        variables[j] = {"x": lit[(j, True)], "~x": lit[(j, False)], "a": a[j], "b": bb[j]}
        for w in (lit[(j, True)], lit[(j, False)]):
            b.add_edge(a[j], w)
            b.add_edge(w, bb[j])
    clauses: dict[int, dict[str, int]] = {}
    for i, clause in enumerate(phi.clauses, start=1):
        pa, pa2 = a[n + 2 * i - 1], a[n + 2 * i]
        pb, pb2 = bb[n + 2 * i - 1], bb[n + 2 * i]
        names = ["l1", "l2", "l3", "p", "q", "h", "h'"]
        vs = {name: b.add_vertex(f"c{i}.{name}") for name in names}
        for x, y in ((pa, vs["l1"]), (vs["l1"], pb), (pb, vs["p"]), (vs["p"], pa)):
            b.add_edge(x, y)
        for x, y in ((pa2, vs["l3"]), (vs["l3"], pb2), (pb2, vs["q"]), (vs["q"], pa2)):
            b.add_edge(x, y)
        b.add_pair(vs["p"], vs["h"])
        b.add_pair(vs["q"], vs["h'"])
        b.add_edge(vs["h"], vs["l2"])
        b.add_edge(vs["h'"], vs["l2"])
        clauses[i] = dict(vs, a=pa, a2=pa2, b=pb, b2=pb2)
    for i in range(1, length):
        b.add_pair(a[i], a[i + 1])
        b.add_pair(bb[i], bb[i + 1])
    for i, clause in enumerate(phi.clauses, start=1):
        for k, literal in enumerate(clause, start=1):
            b.add_pair(clauses[i][f"l{k}"], lit[literal])
    trace = {"variables": variables, "clauses": clauses, "a_chain": a[1:], "b_chain": bb[1:]}
    return ReductionArtifact("Gphi-nae", b.build(), phi, trace=trace)


def _pair_neighbors(g: Multigraph, y: int) -> tuple[list[tuple[int, int]], list[tuple[int, list[int]]]]:
    simple: list[tuple[int, int]] = []
    paired: list[tuple[int, list[int]]] = []
    by_nbr: dict[int, list[int]] = {}
    for w, eid in g.incident(y):
        by_nbr.setdefault(w, []).append(eid)
    for w, eids in sorted(by_nbr.items(), key=lambda t: min(t[1])):
        if len(eids) == 1:
            simple.append((w, eids[0]))
        elif len(eids) == 2:
            paired.append((w, eids))
        else:
            raise GraphError(f"vertex {y} has {len(eids)} parallel edges to {w}")
    return simple, paired


def apply_operation_O(g: Multigraph, y: int, trace: dict | None = None) -> Multigraph:
    """Replace ``y`` by a star structure with tentacles ``z_1..z_{t+1}``.

    The structure is a strip of triangles: a path ``p_0..p_{t+1}`` with
    tentacle ``z_i`` adjacent to ``p_{i-1}`` and ``p_i``. A matching cut cannot
    split a triangle, so the whole structure always lies on one side, just
    as ``y`` did. The vertex ``y`` itself becomes ``z_{t+1}`` and keeps its two
    simple edges; the i-th parallel pair moves to ``z_i`` with its edge ids.
    Every vertex of the structure ends with degree at most four.
    """
    if y not in g:
        raise GraphError(f"vertex {y} not in graph")
    d = g.degree(y)
    simple, paired = _pair_neighbors(g, y)
    t = len(paired)
    if d <= 4 or len(simple) != 2 or d != 2 * t + 2:
        raise GraphError(f"vertex {y} (degree {d}) needs two simple edges and at least two parallel pairs")
    b = GraphBuilder(g)
    name = g.label(y) or str(y)
    path = [b.add_vertex(f"{name}.p{i}") for i in range(t + 2)]
    tentacles = [b.add_vertex(f"{name}.z{i}") for i in range(1, t + 1)] + [y]
    for i in range(1, t + 2):
        b.add_edge(path[i - 1], path[i])
        b.add_edge(tentacles[i - 1], path[i - 1])
        b.add_edge(tentacles[i - 1], path[i])
    for (w, eids), z in zip(paired, tentacles):
        for eid in eids:
            b.move_endpoint(eid, y, z)
    if trace is not None:
        trace.setdefault("stars", {})[y] = tuple(tentacles + path)
    return b.build()


def desimplify(g: Multigraph, trace: dict | None = None) -> Multigraph:
    """Subdivide the lower-id edge of every parallel pair.

    The subdivided edge keeps its id on the half next to its lower endpoint;
    the other half gets a fresh id.
    """
    classes = g.parallel_classes()
    if any(len(c) > 2 for c in classes.values()):
        raise GraphError("desimplify handles parallel classes of size at most two")
    b = GraphBuilder(g)
    replaced = {}
    for cls in sorted(classes.values()):
        if len(cls) < 2:
            continue
        eid = min(cls)
        e = g.edge(eid)
        lo, hi = sorted((e.u, e.v))
        b.remove_edge(eid)
        w = b.add_vertex(f"s{eid}")
        b.add_edge(lo, w, eid=eid)
        replaced[eid] = (eid, b.add_edge(w, hi))
    if trace is not None:
        trace.setdefault("subdivided", {}).update(replaced)
    out = b.build()
    assert out.is_simple()
    return out


def build_Hphi(phi: CnfFormula) -> ReductionArtifact:
    """G_phi plus terminals u and v paired with both ends of their chains."""
    art = build_Gphi_nae(phi)
    b = GraphBuilder(art.graph)
    u = b.add_vertex("u")
    v = b.add_vertex("v")
    a, bb = art.trace["a_chain"], art.trace["b_chain"]
    for end in (a[0], a[-1]):
        b.add_pair(u, end)
    for end in (bb[0], bb[-1]):
        b.add_pair(v, end)
    return ReductionArtifact("Hphi", b.build(), phi, (u, v), trace=art.trace)


def build_Hphi_prime(phi: CnfFormula) -> ReductionArtifact:
    """Simple graph of maximum degree four with a u-v matching cut exactly
    when ``phi`` has a NAE-satisfying assignment."""
    art = build_Hphi(phi)
    g = art.graph
    trace = dict(art.trace)
    for y in [v for v in g.vertices if g.degree(v) > 4]:
        g = apply_operation_O(g, y, trace)
    g = desimplify(g, trace)
    if g.max_degree() != 4:
        raise VerificationError(f"expected maximum degree 4, got {g.max_degree()}")
    return ReductionArtifact("Hphi'", g, phi, art.terminals, trace=trace)


def pad_with_path(art: ReductionArtifact, k: int) -> ReductionArtifact:
    """Attach a path of order ``k`` at the least-id degree-2 vertex and color.

    Path edges get colors ``2..k``; every other edge gets color 1. A u-v
    proper edge-cut under this coloring exists exactly when a u-v matching
    cut exists in the unpadded graph.
    """
    if k < 1:
        raise ValueError("path order must be at least 1")
    g = art.graph
    y0 = next((v for v in g.vertices if g.degree(v) == 2), None)
    if y0 is None:
        raise GraphError("graph has no degree-2 vertex to pad at")
    b = GraphBuilder(g)
    colors = {eid: 1 for eid in g.edge_ids}
    prev = y0
    path = [y0]
    for c in range(2, k + 1):
        w = b.add_vertex(f"P{c}")
        colors[b.add_edge(prev, w)] = c
        path.append(w)
        prev = w
    trace = dict(art.trace, pad_vertex=y0, path=tuple(path))
    return ReductionArtifact(f"padded-{k}", b.build(), art.formula, art.terminals, EdgeColoring(k, colors), trace=trace)


def decode_nae(art: ReductionArtifact, cert: EdgeCutCertificate) -> DecodedAssignment:
    """Variable ``j`` is true when ``x_j`` lies on u's side of the cut."""
    if not verify_matching_cut(art.graph, cert):
        raise GraphError("certificate is not a matching cut of the artifact graph")
    u = art.terminals[0]
    side = matching_cut_side(art.graph, cert.cut, u)
    values = {j: vs["x"] in side for j, vs in art.trace["variables"].items()}
    a = Assignment(values)
    return DecodedAssignment(a, art.formula.nae_satisfied_by(values))


# -- G* : every edge replaced by a 4-cycle ----------------------------------


def edge_to_4cycle(g: Multigraph) -> ReductionArtifact:
    """Replace each edge ``uv`` by the 4-cycle ``u x v y``; old ids are kept."""
    if not g.is_simple():
        raise GraphError("edge_to_4cycle expects a simple graph")
    if not is_connected(g):
        raise GraphError("edge_to_4cycle expects a connected graph")
    b = GraphBuilder()
    for v in g.vertices:
        b.add_vertex(g.label(v), vid=v)
    b.reserve(g.max_vertex_id() + 1, 0)
    new_vertices = {}
    cycles = {}
    for e in g.edges:
        x = b.add_vertex(f"e{e.id}.x")
        y = b.add_vertex(f"e{e.id}.y")
        new_vertices[e.id] = (x, y)
        ux, xv, vy, yu = b.add_edge(e.u, x), b.add_edge(x, e.v), b.add_edge(e.v, y), b.add_edge(y, e.u)
        cycles[e.id] = (ux, xv, vy, yu)
    trace = {"new_vertices": new_vertices, "cycles": cycles, "old_vertices": tuple(g.vertices)}
    return ReductionArtifact("G*", b.build(), trace=trace)


def lift_matching_cut(g: Multigraph, art: ReductionArtifact, cert: EdgeCutCertificate) -> EdgeCutCertificate:
    """Per cut edge ``uv`` take the opposite cycle edges ``ux`` and ``vy``."""
    if not verify_matching_cut(g, cert):
        raise GraphError("input is not a matching cut of g")
    cut = frozenset(eid for e in cert.cut for eid in (art.trace["cycles"][e][0], art.trace["cycles"][e][2]))
    out = EdgeCutCertificate(cert.terminals, cut, MATCHING)
    if not verify_matching_cut(art.graph, out):
        raise VerificationError("lifted cut does not verify in G*")
    return out


def project_matching_cut(g: Multigraph, art: ReductionArtifact, cert: EdgeCutCertificate) -> EdgeCutCertificate:
    """Collapse each 4-cycle holding two cut edges back to its original edge.

    A terminal that is a subdivision vertex is mapped to an original
    neighbour on its own side.
    """
    gs = art.graph
    if not verify_matching_cut(gs, cert):
        raise GraphError("input is not a matching cut of G*")
    cycles = art.trace["cycles"]
    cut = frozenset(e for e, cyc in cycles.items() if sum(c in cert.cut for c in cyc) == 2)
    side = matching_cut_side(gs, cert.cut, cert.terminals[0])
    old = set(art.trace["old_vertices"])

    def to_old(t: int) -> int:
        if t in old:
            return t
        inside = t in side
        return next(w for w in gs.neighbors(t) if (w in side) == inside)

    out = EdgeCutCertificate((to_old(cert.terminals[0]), to_old(cert.terminals[1])), cut, MATCHING)
    if not verify_matching_cut(g, out):
        raise VerificationError("projected cut does not verify in G")
    return out


# -- 3-SAT to s-t rainbow vertex cut -----------------------------------------


def build_Gphi_rvd(phi: CnfFormula) -> ReductionArtifact:
    """Vertex-colored graph with an s-t rainbow vertex-cut exactly when
    ``phi`` is satisfiable.

    Colors: ``r`` = 1 for s, t and every ``c_i``; ``r_j`` = 1 + j for both
    literal vertices of variable j; clause i uses five further colors for
    ``w_{i,1..3}``, the ``u_{i,*}`` and the ``v_{i,*}``.
    """
    n, m = phi.n, phi.m
    b = GraphBuilder()
    colors: dict[int, int] = {}
    s = b.add_vertex("s")
    t = b.add_vertex("t")
    colors[s] = colors[t] = 1
    lit: dict[Literal, int] = {}
    for j in range(1, n + 1):
        for pol in (True, False):
            lit[(j, pol)] = b.add_vertex(_lit_label(j, pol))
            colors[lit[(j, pol)]] = 1 + j
    clauses = {}
    for i in range(1, m + 1):
        base = 1 + n + 5 * (i - 1)
        c = b.add_vertex(f"c{i}")
        colors[c] = 1
        entry = {"c": c}
        for k in (1, 2, 3):
            for name, col in (("u", base + 4), ("v", base + 5), ("w", base + k)):
                vid = b.add_vertex(f"{name}{i},{k}")
                colors[vid] = col
                entry[f"{name}{k}"] = vid
        clauses[i] = entry
    b.add_edge(s, t)
    for j in range(1, n + 1):
        b.add_edge(s, lit[(j, True)])
        b.add_edge(s, lit[(j, False)])
    for i, clause in enumerate(phi.clauses, start=1):
        e = clauses[i]
        for k, (j, pol) in enumerate(clause, start=1):
            # the true literal vertex reaches u, its complement reaches w
            b.add_edge(lit[(j, pol)], e[f"u{k}"])
            b.add_edge(lit[(j, not pol)], e[f"w{k}"])
        for k in (1, 2, 3):
            b.add_edge(e[f"u{k}"], e[f"v{k}"])
            b.add_edge(e["c"], e[f"v{k}"])
            b.add_edge(e["c"], e[f"w{k}"])
        b.add_edge(t, e["c"])
    g = b.build()
    variables = {j: {"x": (lit[(j, True)],), "~x": (lit[(j, False)],)} for j in range(1, n + 1)}
    coloring = VertexColoring(n + 5 * m + 1, colors)
    trace = {"variables": variables, "clauses": clauses}
    return ReductionArtifact("Gphi-rvd", g, phi, (s, t), vertex_coloring=coloring, trace=trace)


def rvd_variant_deg3(art: ReductionArtifact) -> ReductionArtifact:
    """Expand every vertex of degree above three into a same-colored cycle.

    Cycle vertex ``i`` of ``C_v`` takes over the i-th incident edge of ``v``
    (ascending edge id). If s or t is expanded, the cycle vertex on the
    ``st`` edge becomes the new terminal.
    """
    g = art.graph
    big = [v for v in g.vertices if g.degree(v) > 3]
    b = GraphBuilder(g)
    colors = dict(art.vertex_coloring.colors)
    expansion: dict[int, tuple[int, ...]] = {}
    for v in big:
        name = g.label(v) or str(v)
        ring = []
        for i, (w, eid) in enumerate(g.incident(v)):
            z = b.add_vertex(f"{name}.{i}")
            colors[z] = colors[v]
            b.move_endpoint(eid, v, z)
            ring.append(z)
        for i in range(len(ring)):
            b.add_edge(ring[i], ring[(i + 1) % len(ring)])
        b.remove_vertex(v)
        del colors[v]
        expansion[v] = tuple(ring)
    out = b.build()
    s, t = art.terminals
    st = g.edges_between(s, t)[0]
    new_s, new_t = out.edge(st).ends if out.edge(st).u in expansion.get(s, (s,)) else out.edge(st).ends[::-1]
    variables = {
        j: {key: tuple(z for x in ids for z in expansion.get(x, (x,))) for key, ids in vs.items()}
        for j, vs in art.trace["variables"].items()
    }
    trace = dict(art.trace, variables=variables, expansion=expansion)
    coloring = VertexColoring(art.vertex_coloring.k, colors)
    return ReductionArtifact("rvd-deg3", out, art.formula, (new_s, new_t), vertex_coloring=coloring, trace=trace)


def rvd_variant_bipartite(art: ReductionArtifact) -> ReductionArtifact:
    """Subdivide every edge; subdivision vertices take the color of s and t."""
    g = art.graph
    b = GraphBuilder()
    for v in g.vertices:
        b.add_vertex(g.label(v), vid=v)
    colors = dict(art.vertex_coloring.colors)
    r = colors[art.terminals[0]]
    for e in g.edges:
        w = b.add_vertex(f"e{e.id}")
        colors[w] = r
        b.add_edge(e.u, w)
        b.add_edge(w, e.v)
    coloring = VertexColoring(art.vertex_coloring.k, colors)
    return ReductionArtifact("rvd-bipartite", b.build(), art.formula, art.terminals, vertex_coloring=coloring, trace=dict(art.trace))


def decode_rvd(art: ReductionArtifact, cert: VertexCutCertificate) -> DecodedAssignment:
    """x_j is true when a vertex of x_j is in the cut, false when one of ~x_j is.

    Variables with neither in the cut default to false and are reported as
    unconstrained.
    """
    if not verify_rainbow_vertex_cut(art.graph, art.vertex_coloring, cert):
        raise GraphError("certificate is not a rainbow vertex-cut of the artifact graph")
    values = {}
    free = set()
    for j, vs in art.trace["variables"].items():
        if any(v in cert.cut for v in vs["x"]):
            values[j] = True
        elif any(v in cert.cut for v in vs["~x"]):
            values[j] = False
        else:
            values[j] = False
            free.add(j)
    a = Assignment(values, frozenset(free))
    return DecodedAssignment(a, art.formula.satisfied_by(values))


def decode_assignment(art: ReductionArtifact, cert) -> DecodedAssignment:
    """Read a truth assignment off a verified certificate for ``art``."""
    if isinstance(cert, VertexCutCertificate):
        return decode_rvd(art, cert)
    return decode_nae(art, cert)
