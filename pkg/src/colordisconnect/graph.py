"""Multigraph store and the classical subroutines used by every other module.

Vertex and edge ids are arbitrary nonnegative integers. Subgraphs keep the
ids of their parent, so colorings and certificates can be restricted or
lifted between a graph and its pieces without translation tables.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


class GraphError(ValueError):
    """Raised on malformed graph input or a violated precondition."""


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    parallel_class: int  # least edge id joining the same endpoint pair

    def other(self, w: int) -> int:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise GraphError(f"vertex {w} is not an endpoint of edge {self.id}")

    @property
    def ends(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


class Multigraph:
    """Immutable undirected multigraph without self-loops."""

    __slots__ = ("_vertices", "_edges", "_by_id", "_adj", "_labels", "_label_index")

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int, int]],
        labels: Mapping[int, str] | None = None,
    ):
        vs = sorted(set(vertices))
        if vs and vs[0] < 0:
            raise GraphError("vertex ids must be nonnegative")
        vset = set(vs)
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in vs}
        by_id: dict[int, Edge] = {}
        first_of_pair: dict[tuple[int, int], int] = {}
        raw = sorted(edges)
        for eid, u, v in raw:
            if eid in by_id:
                raise GraphError(f"duplicate edge id {eid}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge {eid} has an endpoint outside the vertex set")
            key = (u, v) if u < v else (v, u)
            cls = first_of_pair.setdefault(key, eid)
            e = Edge(eid, u, v, cls)
            by_id[eid] = e
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        for v in vs:
            adj[v].sort(key=lambda t: t[1])
        self._vertices = tuple(vs)
        self._edges = tuple(by_id[eid] for eid, _, _ in raw)
        self._by_id = by_id
        self._adj = {v: tuple(a) for v, a in adj.items()}
        self._labels = {v: labels[v] for v in vs if labels and v in labels}
        self._label_index = {lab: v for v, lab in self._labels.items()}

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self._edges)

    @property
    def labels(self) -> dict[int, str]:
        return dict(self._labels)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphError(f"unknown edge id {eid}") from None

    def has_edge_id(self, eid: int) -> bool:
        return eid in self._by_id

    def label(self, v: int) -> str | None:
        return self._labels.get(v)

    def vertex(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise GraphError(f"no vertex labelled {label!r}") from None

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """(neighbour, edge id) pairs at ``v``, ascending by edge id."""
        return self._adj[v]

    def incident_edges(self, v: int) -> list[int]:
        return [eid for _, eid in self._adj[v]]

    def neighbors(self, v: int) -> list[int]:
        return sorted({w for w, _ in self._adj[v]})

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj.values()), default=0)

    def edges_between(self, u: int, v: int) -> list[int]:
        return [eid for w, eid in self._adj[u] if w == v]

    def adjacent(self, u: int, v: int) -> bool:
        return any(w == v for w, _ in self._adj[u])

    def parallel_classes(self) -> dict[int, list[int]]:
        classes: dict[int, list[int]] = {}
        for e in self._edges:
            classes.setdefault(e.parallel_class, []).append(e.id)
        return classes

    def is_simple(self) -> bool:
        return all(e.parallel_class == e.id for e in self._edges)

    def max_edge_id(self) -> int:
        return max((e.id for e in self._edges), default=-1)

    def max_vertex_id(self) -> int:
        return self._vertices[-1] if self._vertices else -1

    # -- derived graphs ------------------------------------------------

    def subgraph(self, vertices: Iterable[int]) -> "Multigraph":
        keep = set(vertices)
        return Multigraph(
            keep,
            ((e.id, e.u, e.v) for e in self._edges if e.u in keep and e.v in keep),
            self._labels,
        )

    def edge_subgraph(self, edge_ids: Iterable[int], keep_vertices: bool = False) -> "Multigraph":
        ids = set(edge_ids)
        es = [self.edge(i) for i in sorted(ids)]
        vs = set(self._vertices) if keep_vertices else {w for e in es for w in (e.u, e.v)}
        return Multigraph(vs, ((e.id, e.u, e.v) for e in es), self._labels)

    def without_edges(self, edge_ids: Iterable[int]) -> "Multigraph":
        drop = set(edge_ids)
        return Multigraph(
            self._vertices,
            ((e.id, e.u, e.v) for e in self._edges if e.id not in drop),
            self._labels,
        )

    def without_vertices(self, vertices: Iterable[int]) -> "Multigraph":
        drop = set(vertices)
        return self.subgraph(v for v in self._vertices if v not in drop)

    def triples(self) -> list[tuple[int, int, int]]:
        return [(e.id, e.u, e.v) for e in self._edges]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self.triples() == other.triples()
            and self._labels == other._labels
        )

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self.triples())))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


class GraphBuilder:
    """Mutable staging area; call :meth:`build` to freeze."""

    def __init__(self, graph: Multigraph | None = None):
        self._vertices: set[int] = set()
        self._edges: dict[int, tuple[int, int]] = {}
        self._labels: dict[int, str] = {}
        self._next_v = 0
        self._next_e = 0
        if graph is not None:
            for v in graph.vertices:
                self.add_vertex(graph.label(v), vid=v)
            for e in graph.edges:
                self.add_edge(e.u, e.v, eid=e.id)

    def add_vertex(self, label: str | None = None, vid: int | None = None) -> int:
        if vid is None:
            vid = self._next_v
        if vid in self._vertices:
            raise GraphError(f"vertex {vid} already present")
        self._vertices.add(vid)
        self._next_v = max(self._next_v, vid + 1)
        if label is not None:
            self._labels[vid] = label
        return vid

    def add_edge(self, u: int, v: int, eid: int | None = None) -> int:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if u not in self._vertices or v not in self._vertices:
            raise GraphError(f"edge ({u}, {v}) has a missing endpoint")
        if eid is None:
            eid = self._next_e
        if eid in self._edges:
            raise GraphError(f"edge id {eid} already present")
        self._edges[eid] = (u, v)
        self._next_e = max(self._next_e, eid + 1)
        return eid

    def add_pair(self, u: int, v: int) -> tuple[int, int]:
        """Two parallel edges between ``u`` and ``v``."""
        return self.add_edge(u, v), self.add_edge(u, v)

    def move_endpoint(self, eid: int, old: int, new: int) -> None:
        u, v = self._edges[eid]
        if u == old:
            self._edges[eid] = (new, v)
        elif v == old:
            self._edges[eid] = (u, new)
        else:
            raise GraphError(f"vertex {old} is not an endpoint of edge {eid}")

    def remove_edge(self, eid: int) -> tuple[int, int]:
        return self._edges.pop(eid)

    def remove_vertex(self, v: int) -> None:
        if any(v in ends for ends in self._edges.values()):
            raise GraphError(f"vertex {v} still has incident edges")
        self._vertices.discard(v)
        self._labels.pop(v, None)

    def reserve(self, next_vertex: int, next_edge: int) -> None:
        """Make freshly allocated ids start no lower than the given values."""
        self._next_v = max(self._next_v, next_vertex)
        self._next_e = max(self._next_e, next_edge)

    def label(self, v: int) -> str | None:
        return self._labels.get(v)

    def build(self) -> Multigraph:
        return Multigraph(
            self._vertices,
            ((eid, u, v) for eid, (u, v) in self._edges.items()),
            self._labels,
        )


def build_graph(pairs: Sequence[tuple[object, object]], allow_parallel: bool = False) -> Multigraph:
    """Graph with one vertex per distinct label, edge ids in input order.

    Vertex ids follow first appearance; labels are ``str`` of the inputs.
    """
    b = GraphBuilder()
    ids: dict[object, int] = {}
    seen: set[tuple[int, int]] = set()
    for a, c in pairs:
        if a == c:
            raise GraphError(f"self-loop at {a!r}")
        for lab in (a, c):
            if lab not in ids:
                ids[lab] = b.add_vertex(str(lab))
        u, v = ids[a], ids[c]
        key = (min(u, v), max(u, v))
        if key in seen and not allow_parallel:
            raise GraphError(f"duplicate edge {a!r}-{c!r}")
        seen.add(key)
        b.add_edge(u, v)
    return b.build()


def from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> Multigraph:
    """Graph on vertices ``0..n-1`` with edge ids in input order."""
    return Multigraph(range(n), ((i, u, v) for i, (u, v) in enumerate(pairs)))


# -- connectivity ------------------------------------------------------


def components(g: Multigraph) -> list[list[int]]:
    """Connected components, each sorted, ordered by least member."""
    seen: set[int] = set()
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in g.incident(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Multigraph) -> bool:
    return len(components(g)) <= 1


def reachable(g: Multigraph, start: int, banned_edges: Iterable[int] = (), banned_vertices: Iterable[int] = ()) -> set[int]:
    bad_e = set(banned_edges)
    bad_v = set(banned_vertices)
    if start in bad_v:
        return set()
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w, eid in g.incident(v):
            if eid in bad_e or w in bad_v or w in seen:
                continue
            seen.add(w)
            stack.append(w)
    return seen


def separates(g: Multigraph, cut_edges: Iterable[int], x: int, y: int) -> bool:
    return y not in reachable(g, x, banned_edges=cut_edges)


def _lowpoints(g: Multigraph):
    """Iterative DFS yielding discovery order, low values and tree structure."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    parent_edge: dict[int, int | None] = {}
    order: list[int] = []
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        parent_edge[root] = None
        order.append(root)
        stack: list[tuple[int, Iterator[tuple[int, int]]]] = [(root, iter(g.incident(root)))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w, eid in it:
                if eid == parent_edge[v]:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    parent_edge[w] = eid
                    order.append(w)
                    stack.append((w, iter(g.incident(w))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
    return disc, low, parent_edge, order


def bridges(g: Multigraph) -> set[int]:
    """Edges whose removal increases the number of components."""
    disc, low, parent_edge, _ = _lowpoints(g)
    out = set()
    for v, eid in parent_edge.items():
        if eid is not None and low[v] > disc[g.edge(eid).other(v)]:
            out.add(eid)
    return out


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: frozenset[int]

    @property
    def is_k2(self) -> bool:
        return len(self.vertices) == 2 and len(self.edges) == 1


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]


def block_decomposition(g: Multigraph) -> BlockDecomposition:
    """Blocks (K2 or 2-connected pieces) and cut vertices of a connected graph."""
    if not is_connected(g):
        raise GraphError("block decomposition needs a connected graph")
    if g.n == 0:
        return BlockDecomposition((), frozenset())
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[Block] = []
    cut_vertices: set[int] = set()
    edge_stack: list[int] = []
    root = g.vertices[0]
    disc[root] = low[root] = 0
    counter = 1
    root_children = 0
    stack: list[tuple[int, int | None, Iterator[tuple[int, int]]]] = [(root, None, iter(g.incident(root)))]
    while stack:
        v, pe, it = stack[-1]
        advanced = False
        for w, eid in it:
            if eid == pe:
                continue
            if w not in disc:
                edge_stack.append(eid)
                disc[w] = low[w] = counter
                counter += 1
                stack.append((w, eid, iter(g.incident(w))))
                advanced = True
                break
            if disc[w] < disc[v]:
                edge_stack.append(eid)
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if not stack:
            break
        p = stack[-1][0]
        low[p] = min(low[p], low[v])
        if low[v] >= disc[p]:
            if p == root:
                root_children += 1
            else:
                cut_vertices.add(p)
            es: set[int] = set()
            while True:
                eid = edge_stack.pop()
                es.add(eid)
                if eid == pe:
                    break
            vs = {w for e in es for w in (g.edge(e).u, g.edge(e).v)}
            blocks.append(Block(frozenset(vs), frozenset(es)))
    if root_children > 1:
        cut_vertices.add(root)
    if not blocks:
        blocks.append(Block(frozenset([root]), frozenset()))
    blocks.sort(key=lambda b: (min(b.edges) if b.edges else -1))
    return BlockDecomposition(tuple(blocks), frozenset(cut_vertices))


# -- matchings ---------------------------------------------------------


def is_matching(g: Multigraph, edge_ids: Iterable[int]) -> bool:
    used: set[int] = set()
    for eid in edge_ids:
        e = g.edge(eid)
        if e.u in used or e.v in used:
            return False
        used.add(e.u)
        used.add(e.v)
    return True


def perfect_matching(g: Multigraph) -> set[int] | None:
    """A perfect matching by exact backtracking, or ``None`` if none exists.

    Branches on the least unmatched vertex, trying its edges in id order.
    Any component of unmatched vertices with odd order prunes the branch.
    """
    if g.n % 2:
        return None
    matched: set[int] = set()
    chosen: list[int] = []

    def odd_leftover() -> bool:
        free = [v for v in g.vertices if v not in matched]
        seen: set[int] = set()
        for s in free:
            if s in seen:
                continue
            size = 0
            stack = [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                size += 1
                for w, _ in g.incident(v):
                    if w not in matched and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if size % 2:
                return True
        return False

    def search() -> bool:
        v = next((w for w in g.vertices if w not in matched), None)
        if v is None:
            return True
        if odd_leftover():
            return False
        for w, eid in g.incident(v):
            if w in matched:
                continue
            matched.update((v, w))
            chosen.append(eid)
            if search():
                return True
            chosen.pop()
            matched.difference_update((v, w))
        return False

    return set(chosen) if search() else None


# -- pendant stripping and patterns ------------------------------------


def strip_pendants(g: Multigraph) -> tuple[Multigraph, list[tuple[int, int]]]:
    """Remove degree-1 vertices until none remain.

    Returns the stripped graph and the removal order as ``(vertex, edge id)``
    pairs. Trees shrink to a single vertex.
    """
    deg = {v: g.degree(v) for v in g.vertices}
    alive_v = set(g.vertices)
    alive_e = set(g.edge_ids)
    removed: list[tuple[int, int]] = []
    while True:
        leaf = next((v for v in sorted(alive_v) if deg[v] == 1), None)
        if leaf is None or len(alive_v) <= 1:
            break
        eid = next(e for _, e in g.incident(leaf) if e in alive_e)
        other = g.edge(eid).other(leaf)
        alive_e.discard(eid)
        alive_v.discard(leaf)
        deg[other] -= 1
        deg[leaf] = 0
        removed.append((leaf, eid))
    core = Multigraph(alive_v, ((e.id, e.u, e.v) for e in g.edges if e.id in alive_e), g.labels)
    return core, removed


def find_pattern(g: Multigraph, pattern: str) -> tuple[int, ...] | None:
    """Witness vertices of a triangle or a K_{2,3} subgraph, or ``None``.

    A K_{2,3} witness is ``(a, b, c1, c2, c3)`` with ``a, b`` the degree-3 side.
    """
    if pattern == "triangle":
        for e in g.edges:
            common = set(g.neighbors(e.u)) & set(g.neighbors(e.v))
            if common:
                return tuple(sorted((e.u, e.v, min(common))))
        return None
    if pattern in ("K23", "k23"):
        vs = g.vertices
        for i, a in enumerate(vs):
            na = set(g.neighbors(a))
            for b in vs[i + 1:]:
                common = sorted(na & set(g.neighbors(b)))
                if len(common) >= 3:
                    return (a, b, *common[:3])
        return None
    raise ValueError(f"unknown pattern {pattern!r}")


def is_bipartite(g: Multigraph) -> bool:
    side: dict[int, int] = {}
    for s in g.vertices:
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in g.incident(v):
                if w not in side:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def is_tree(g: Multigraph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)
