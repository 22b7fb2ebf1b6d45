"""Colorings, cut certificates, their verifiers and exact cut finders.

Edge-cut finders search vertex bipartitions rather than edge subsets. If
some proper (or matching) edge set separates ``x`` from ``y``, the boundary
of ``x``'s component after removing it is a subset of that set and is
therefore proper as well, so bipartition search is complete.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import GraphError, Multigraph, is_matching, reachable

MATCHING = "matching"
PROPER = "proper"


@dataclass(frozen=True)
class EdgeColoring:
    k: int
    colors: Mapping[int, int] = field(hash=False)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("an edge coloring needs k >= 1")
        for eid, c in self.colors.items():
            if not 1 <= c <= self.k:
                raise ValueError(f"edge {eid} has color {c} outside [1, {self.k}]")

    @classmethod
    def constant(cls, g: Multigraph, color: int = 1) -> "EdgeColoring":
        return cls(color, {eid: color for eid in g.edge_ids})

    @classmethod
    def from_colors(cls, colors: Mapping[int, int]) -> "EdgeColoring":
        return cls(max(colors.values(), default=1), dict(colors))

    def __getitem__(self, eid: int) -> int:
        return self.colors[eid]

    def used(self) -> set[int]:
        return set(self.colors.values())

    def restrict(self, edge_ids: Iterable[int]) -> "EdgeColoring":
        return EdgeColoring(self.k, {e: self.colors[e] for e in edge_ids})

    def validate(self, g: Multigraph) -> None:
        missing = [e for e in g.edge_ids if e not in self.colors]
        if missing:
            raise GraphError(f"edges {missing[:5]} are uncolored")


@dataclass(frozen=True)
class VertexColoring:
    k: int
    colors: Mapping[int, int] = field(hash=False)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("a vertex coloring needs k >= 1")
        for v, c in self.colors.items():
            if not 1 <= c <= self.k:
                raise ValueError(f"vertex {v} has color {c} outside [1, {self.k}]")

    @classmethod
    def from_colors(cls, colors: Mapping[int, int]) -> "VertexColoring":
        return cls(max(colors.values(), default=1), dict(colors))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def used(self) -> set[int]:
        return set(self.colors.values())

    def validate(self, g: Multigraph) -> None:
        missing = [v for v in g.vertices if v not in self.colors]
        if missing:
            raise GraphError(f"vertices {missing[:5]} are uncolored")


@dataclass(frozen=True)
class EdgeCutCertificate:
    terminals: tuple[int, int]
    cut: frozenset[int]
    kind: str = PROPER

    def __post_init__(self):
        if self.kind not in (MATCHING, PROPER):
            raise ValueError(f"unknown certificate kind {self.kind!r}")


@dataclass(frozen=True)
class VertexCutCertificate:
    terminals: tuple[int, int]
    cut: frozenset[int]


# -- verifiers ---------------------------------------------------------


def is_proper_edge_set(g: Multigraph, coloring: EdgeColoring, edge_ids: Iterable[int]) -> bool:
    """Each color class of the set is a matching."""
    seen: set[tuple[int, int]] = set()
    for eid in edge_ids:
        e = g.edge(eid)
        c = coloring[eid]
        for w in (e.u, e.v):
            if (w, c) in seen:
                return False
            seen.add((w, c))
    return True


def verify_proper_edge_cut(g: Multigraph, coloring: EdgeColoring, cert: EdgeCutCertificate) -> bool:
    for eid in cert.cut:
        g.edge(eid)
    x, y = cert.terminals
    if x == y or x not in g or y not in g:
        return False
    if y in reachable(g, x, banned_edges=cert.cut):
        return False
    if cert.kind == MATCHING and not is_matching(g, cert.cut):
        return False
    return is_proper_edge_set(g, coloring, cert.cut)


def verify_matching_cut(g: Multigraph, cert: EdgeCutCertificate) -> bool:
    for eid in cert.cut:
        g.edge(eid)
    x, y = cert.terminals
    return x != y and is_matching(g, cert.cut) and y not in reachable(g, x, banned_edges=cert.cut)


def _is_rainbow(coloring: VertexColoring, vertices: Iterable[int]) -> bool:
    seen = set()
    for v in vertices:
        c = coloring[v]
        if c in seen:
            return False
        seen.add(c)
    return True


def verify_rainbow_vertex_cut(g: Multigraph, coloring: VertexColoring, cert: VertexCutCertificate) -> bool:
    x, y = cert.terminals
    if x in cert.cut or y in cert.cut:
        raise GraphError("a vertex cut must not contain its terminals")
    for v in cert.cut:
        if v not in g:
            raise GraphError(f"unknown vertex {v}")
    if x == y:
        return False
    xy_edges = g.edges_between(x, y)
    if y in reachable(g, x, banned_edges=xy_edges, banned_vertices=cert.cut):
        return False
    if not xy_edges:
        return _is_rainbow(coloring, cert.cut)
    return _is_rainbow(coloring, [*cert.cut, x]) or _is_rainbow(coloring, [*cert.cut, y])


# -- bipartition search ------------------------------------------------


class _BoundarySearch:
    """Depth-first bipartition search under a per-vertex distinct-color rule.

    A vertex may have at most one cross edge of each color. With a single
    color this is exactly the matching-cut condition.
    """

    def __init__(self, g: Multigraph, edge_color: Mapping[int, int]):
        self.g = g
        self.ids = list(g.vertices)
        self.index = {v: i for i, v in enumerate(self.ids)}
        palette = sorted(set(edge_color[e] for e in g.edge_ids))
        cidx = {c: i for i, c in enumerate(palette)}
        self.K = max(1, len(palette))
        n = len(self.ids)
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self.by_color: list[list[list[int]]] = [[[] for _ in range(self.K)] for _ in range(n)]
        for e in g.edges:
            u, v, c = self.index[e.u], self.index[e.v], cidx[edge_color[e.id]]
            self.adj[u].append((v, c))
            self.adj[v].append((u, c))
            self.by_color[u][c].append(v)
            self.by_color[v][c].append(u)
        self.glued = self._glue_classes(n)

    def _glue_classes(self, n: int) -> list[list[int]]:
        """Vertices that every admissible bipartition puts on one side.

        A same-colored parallel pair, or a triangle whose three edges share a
        color, cannot be split: some vertex would get two cross edges of that
        color.
        """
        parent = list(range(n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        def union(a, b):
            a, b = find(a), find(b)
            if a != b:
                parent[max(a, b)] = min(a, b)

        for u in range(n):
            for c, nbrs in enumerate(self.by_color[u]):
                seen = set()
                for v in nbrs:
                    if v in seen:
                        union(u, v)
                    seen.add(v)
                for v in seen:
                    if v > u and seen.intersection(self.by_color[v][c]):
                        union(u, v)
        members: dict[int, list[int]] = {}
        for v in range(n):
            members.setdefault(find(v), []).append(v)
        return [members[find(v)] for v in range(n)]

    def run(self, x: int, y: int) -> list[int] | None:
        n = len(self.ids)
        K = self.K
        side = [-1] * n
        cross = [0] * n
        cnt = [0] * (n * 2 * K)
        near = [0] * n  # assigned-neighbour count, drives branching order
        trail: list[tuple[list[int], int, int]] = []

        def setv(arr, i, val):
            trail.append((arr, i, arr[i]))
            arr[i] = val

        def undo(mark):
            while len(trail) > mark:
                arr, i, old = trail.pop()
                arr[i] = old

        adj, by_color, glued = self.adj, self.by_color, self.glued

        def propagate(queue: list[tuple[int, int]]) -> bool:
            while queue:
                v, s = queue.pop()
                if side[v] == s:
                    continue
                if side[v] != -1:
                    return False
                setv(side, v, s)
                for w in glued[v]:
                    if w != v:
                        queue.append((w, s))
                for w, c in adj[v]:
                    sw = side[w]
                    if sw == -1:
                        setv(near, w, near[w] + 1)
                        k = (w * 2 + s) * K + c
                        setv(cnt, k, cnt[k] + 1)
                        if cnt[k] >= 2 or cross[v] >> c & 1:
                            queue.append((w, s))
                    elif sw != s:
                        bit = 1 << c
                        if cross[v] & bit or cross[w] & bit:
                            return False
                        setv(cross, v, cross[v] | bit)
                        setv(cross, w, cross[w] | bit)
                        for z in by_color[v][c]:
                            if z != w and side[z] == -1:
                                queue.append((z, s))
                        for z in by_color[w][c]:
                            if z != v and side[z] == -1:
                                queue.append((z, sw))
            return True

        def groups(pool: list[int]) -> list[list[int]]:
            """Split unassigned vertices into groups that cannot interact.

            Two unassigned vertices interact if they are adjacent, or if they
            are c-neighbours of an assigned vertex that has no cross edge of
            color c yet (at most one of them may cross there).
            """
            parent = {v: v for v in pool}

            def find(v):
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                return v

            hub: dict[tuple[int, int], int] = {}
            for v in pool:
                for w, c in adj[v]:
                    if side[w] == -1:
                        other = w
                    elif cross[w] >> c & 1:
                        continue
                    else:
                        other = hub.setdefault((w, c), v)
                    a, b = find(v), find(other)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
            out: dict[int, list[int]] = {}
            for v in pool:
                out.setdefault(find(v), []).append(v)
            return [out[r] for r in sorted(out)]

        def pick(group: list[int]) -> int:
            # most constrained first: most assigned neighbours, lowest index on ties
            best, best_near = -1, -1
            for i in group:
                if near[i] > best_near:
                    best, best_near = i, near[i]
            return best

        def first_value(v: int) -> int:
            ones = sum(1 for w, _ in adj[v] if side[w] == 1)
            zeros = sum(1 for w, _ in adj[v] if side[w] == 0)
            return 1 if ones > zeros else 0

        xi, yi = self.index[x], self.index[y]
        if not propagate([(yi, 1), (xi, 0)]):
            return None

        def solve(pool: list[int]) -> bool:
            # independent groups: a failing group fails the whole pool, and a
            # solved group never needs revisiting
            for group in groups([i for i in pool if side[i] == -1]):
                if not branch(group):
                    return False
            return True

        def branch(group: list[int]) -> bool:
            v = pick(group)
            first = first_value(v)
            for s in (first, 1 - first):
                mark = len(trail)
                if propagate([(v, s)]) and solve(group):
                    return True
                undo(mark)
            return False

        def search() -> bool:
            return solve(list(range(n)))

        if not search():
            return None
        return side

    def boundary(self, side: list[int]) -> frozenset[int]:
        ix = self.index
        return frozenset(e.id for e in self.g.edges if side[ix[e.u]] != side[ix[e.v]])


def _check_terminals(g: Multigraph, x: int, y: int) -> None:
    if x not in g or y not in g:
        raise GraphError("terminal not in graph")
    if x == y:
        raise GraphError("terminals must be distinct")


def find_proper_edge_cut(g: Multigraph, coloring: EdgeColoring, x: int, y: int) -> EdgeCutCertificate | None:
    """An x-y proper edge-cut under ``coloring``, or ``None`` if none exists."""
    _check_terminals(g, x, y)
    coloring.validate(g)
    search = _BoundarySearch(g, coloring.colors)
    side = search.run(x, y)
    if side is None:
        return None
    return EdgeCutCertificate((x, y), search.boundary(side), PROPER)


def find_matching_cut(g: Multigraph, x: int, y: int) -> EdgeCutCertificate | None:
    """An x-y matching cut, or ``None`` if none exists."""
    _check_terminals(g, x, y)
    search = _BoundarySearch(g, {eid: 1 for eid in g.edge_ids})
    side = search.run(x, y)
    if side is None:
        return None
    return EdgeCutCertificate((x, y), search.boundary(side), MATCHING)


def matching_cut_side(g: Multigraph, cut: Iterable[int], x: int) -> set[int]:
    """Vertices reachable from ``x`` once ``cut`` is removed."""
    return reachable(g, x, banned_edges=cut)


# -- rainbow vertex cuts -----------------------------------------------


def _rainbow_search(
    g: Multigraph,
    coloring: VertexColoring,
    x: int,
    y: int,
    banned_edges: set[int],
    forbidden_colors: set[int],
) -> frozenset[int] | None:
    chosen: list[int] = []
    used = set(forbidden_colors)
    excluded: set[int] = set()
    inc = {v: [(w, e) for w, e in g.incident(v) if e not in banned_edges] for v in g.vertices}

    def choosable(v: int) -> bool:
        return v != x and v != y and v not in excluded and coloring[v] not in used

    def cheapest_path() -> list[int] | None:
        # 0-1 BFS: a step onto a choosable vertex costs one.
        blocked = set(chosen)
        dist = {x: 0}
        prev: dict[int, int] = {}
        dq = deque([x])
        done: set[int] = set()
        while dq:
            v = dq.popleft()
            if v in done:
                continue
            done.add(v)
            if v == y:
                break
            for w, _ in inc[v]:
                if w in blocked:
                    continue
                cost = dist[v] + (1 if choosable(w) else 0)
                if cost < dist.get(w, 1 << 30):
                    dist[w] = cost
                    prev[w] = v
                    if cost == dist[v]:
                        dq.appendleft(w)
                    else:
                        dq.append(w)
        if y not in dist:
            return None
        path = [y]
        while path[-1] != x:
            path.append(prev[path[-1]])
        return path[::-1]

    def search() -> bool:
        path = cheapest_path()
        if path is None:
            return True
        cands = [v for v in path[1:-1] if choosable(v)]
        added: list[int] = []
        ok = False
        for v in cands:
            chosen.append(v)
            used.add(coloring[v])
            if search():
                ok = True
                break
            chosen.pop()
            used.discard(coloring[v])
            excluded.add(v)
            added.append(v)
        excluded.difference_update(added)
        return ok

    return frozenset(chosen) if search() else None


def find_rainbow_vertex_cut(g: Multigraph, coloring: VertexColoring, x: int, y: int) -> VertexCutCertificate | None:
    """An x-y rainbow vertex-cut, or ``None`` if none exists.

    For adjacent terminals the x-y edges are ignored and the cut plus ``x``
    is tried first, then the cut plus ``y``.
    """
    _check_terminals(g, x, y)
    coloring.validate(g)
    xy = set(g.edges_between(x, y))
    options = [set()] if not xy else [{coloring[x]}, {coloring[y]}]
    for forbidden in options:
        cut = _rainbow_search(g, coloring, x, y, xy, forbidden)
        if cut is not None:
            return VertexCutCertificate((x, y), cut)
    return None
