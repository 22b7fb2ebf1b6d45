"""Independent brute-force oracles used to derive and check expected values.

These deliberately share no search code with the package: they enumerate
edge subsets, vertex subsets and colorings directly.
"""

from __future__ import annotations

import itertools

from colordisconnect.graph import Multigraph


def _reach(g: Multigraph, start, banned_edges=(), banned_vertices=()):
    banned_edges, banned_vertices = set(banned_edges), set(banned_vertices)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for e in g.edges:
            if e.id in banned_edges or v not in (e.u, e.v):
                continue
            w = e.v if e.u == v else e.u
            if w not in seen and w not in banned_vertices:
                seen.add(w)
                stack.append(w)
    return seen


def proper_set(g: Multigraph, colors, edges) -> bool:
    edges = list(edges)
    for a, b in itertools.combinations(edges, 2):
        ea, eb = g.edge(a), g.edge(b)
        if colors[a] == colors[b] and {ea.u, ea.v} & {eb.u, eb.v}:
            return False
    return True


def has_proper_cut(g: Multigraph, colors, x, y) -> bool:
    """Some edge subset separating x from y with every color class a matching."""
    ids = list(g.edge_ids)
    for r in range(len(ids) + 1):
        for sub in itertools.combinations(ids, r):
            if y not in _reach(g, x, sub) and proper_set(g, colors, sub):
                return True
    return False


def has_matching_cut(g: Multigraph, x, y) -> bool:
    return has_proper_cut(g, {e: 1 for e in g.edge_ids}, x, y)


def rainbow(colors, vertices) -> bool:
    vertices = list(vertices)
    return len({colors[v] for v in vertices}) == len(vertices)


def has_rainbow_vertex_cut(g: Multigraph, colors, x, y) -> bool:
    """Every vertex subset avoiding x and y, tried directly against the definition."""
    others = [v for v in g.vertices if v not in (x, y)]
    xy = [e.id for e in g.edges if {e.u, e.v} == {x, y}]
    for r in range(len(others) + 1):
        for sub in itertools.combinations(others, r):
            if y in _reach(g, x, xy, sub):
                continue
            if not xy:
                if rainbow(colors, sub):
                    return True
            elif rainbow(colors, (*sub, x)) or rainbow(colors, (*sub, y)):
                return True
    return False


def all_pairs(g: Multigraph, test) -> bool:
    return all(test(x, y) for x, y in itertools.combinations(g.vertices, 2))


def pd_bruteforce(g: Multigraph, max_k: int | None = None) -> int:
    """Smallest k such that some k-coloring (all k^m tried) works for all pairs."""
    ids = list(g.edge_ids)
    top = max_k or len(ids)
    for k in range(1, top + 1):
        for combo in itertools.product(range(1, k + 1), repeat=len(ids)):
            colors = dict(zip(ids, combo))
            if all_pairs(g, lambda x, y: has_proper_cut(g, colors, x, y)):
                return k
    raise AssertionError("no coloring found")


def rvd_bruteforce(g: Multigraph) -> int:
    vs = list(g.vertices)
    for k in range(1, len(vs) + 1):
        for combo in itertools.product(range(1, k + 1), repeat=len(vs)):
            colors = dict(zip(vs, combo))
            if all_pairs(g, lambda x, y: has_rainbow_vertex_cut(g, colors, x, y)):
                return k
    raise AssertionError("no coloring found")


def has_perfect_matching(g: Multigraph) -> bool:
    ids = list(g.edge_ids)
    need = g.n // 2
    if g.n % 2:
        return False
    for sub in itertools.combinations(ids, need):
        ends = [v for e in sub for v in g.edge(e).ends]
        if len(set(ends)) == g.n:
            return True
    return False


def chromatic_index_bruteforce(g: Multigraph) -> int:
    ids = list(g.edge_ids)
    for k in range(1, 2 * max(1, g.max_degree()) + 1):
        for combo in itertools.product(range(1, k + 1), repeat=len(ids)):
            colors = dict(zip(ids, combo))
            if proper_set(g, colors, ids):
                return k
    raise AssertionError


def nae_bruteforce_all(phi):
    """Every NAE-satisfying assignment, listed in binary order."""
    out = []
    for bits in itertools.product([False, True], repeat=phi.n):
        values = {j + 1: b for j, b in enumerate(reversed(bits))}
        if all(len({values[v] == p for v, p in c}) == 2 for c in phi.clauses):
            out.append(values)
    return out


def sat_by_clauses(phi, values) -> bool:
    for clause in phi.clauses:
        if not any(values[v] if p else not values[v] for v, p in clause):
            return False
    return True
