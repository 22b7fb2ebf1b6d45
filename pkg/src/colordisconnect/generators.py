"""Deterministic instance generators. Every generator takes a
``random.Random`` (or a seed) and produces the same output for the same seed."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .constructive import in_indep_deg3_class
from .graph import Multigraph, find_pattern, from_edges, is_connected
from .reductions import CnfFormula


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


# -- formulas ----------------------------------------------------------------


def random_cnf(n: int, m: int, seed=0) -> CnfFormula:
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    rng = _rng(seed)
    lits = [v * s for v in range(1, n + 1) for s in (1, -1)]
    return CnfFormula.from_ints(n, [[rng.choice(lits) for _ in range(3)] for _ in range(m)])


def all_cnf(n: int, m: int) -> Iterator[CnfFormula]:
    """Every formula with exactly ``n`` variables and ``m`` ordered clauses."""
    lits = [v * s for v in range(1, n + 1) for s in (1, -1)]
    for clauses in itertools.product(itertools.product(lits, repeat=3), repeat=m):
        yield CnfFormula.from_ints(n, clauses)


# -- graphs -------------------------------------------------------------------


def random_connected_graph(n: int, extra: float = 0.3, seed=0, max_degree: int | None = None) -> Multigraph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    if n < 1:
        raise ValueError("need n >= 1")
    rng = _rng(seed)
    deg = [0] * n
    edges: list[tuple[int, int]] = []
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        choices = [order[j] for j in range(i) if max_degree is None or deg[order[j]] < max_degree]
        if not choices:
            return random_connected_graph(n, extra, rng, max_degree)
        u = rng.choice(choices)
        v = order[i]
        edges.append((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    present = set(edges)
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) in present or rng.random() >= extra:
            continue
        if max_degree is not None and (deg[u] >= max_degree or deg[v] >= max_degree):
            continue
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    return from_edges(n, sorted(edges))


def random_tree(n: int, seed=0) -> Multigraph:
    return random_connected_graph(n, 0.0, seed)


def random_cubic(n: int, seed=0) -> Multigraph:
    """Connected simple cubic graph from the pairing model with rejection."""
    if n < 4 or n % 2:
        raise ValueError(f"no cubic graph of order {n}")
    rng = _rng(seed)
    while True:
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        pairs = [(min(a, b), max(a, b)) for a, b in zip(points[::2], points[1::2])]
        if any(a == b for a, b in pairs) or len(set(pairs)) != len(pairs):
            continue
        g = from_edges(n, sorted(pairs))
        if is_connected(g):
            return g


def complete_graph(n: int) -> Multigraph:
    return from_edges(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Multigraph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)] if n > 2 else [(0, 1)])


def complete_bipartite(a: int, b: int) -> Multigraph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism() -> Multigraph:
    """Two triangles joined by a perfect matching (also called G0 here)."""
    return from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def cube() -> Multigraph:
    return from_edges(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


def wagner() -> Multigraph:
    """The 8-vertex Moebius ladder."""
    return from_edges(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def subdivided_k4() -> Multigraph:
    """K4 with every edge subdivided once."""
    edges = []
    for i, (u, v) in enumerate(itertools.combinations(range(4), 2)):
        edges += [(u, 4 + i), (4 + i, v)]
    return from_edges(10, edges)


def cubic_catalog(random_count: int = 0, max_order: int = 10, seed=0) -> list[tuple[str, Multigraph]]:
    out = [
        ("K4", complete_graph(4)),
        ("K3,3", complete_bipartite(3, 3)),
        ("prism", prism()),
        ("G0", prism()),
        ("cube", cube()),
        ("wagner", wagner()),
        ("petersen", petersen()),
    ]
    rng = _rng(seed)
    orders = list(range(4, max_order + 1, 2))
    for i in range(random_count):
        n = rng.choice(orders)
        out.append((f"random-cubic-{i}-n{n}", random_cubic(n, rng)))
    return out


def _indep_ok(adj: dict[int, set[int]], u: int, v: int) -> bool:
    """Adding uv keeps degrees <= 3 and degree-3 vertices independent."""
    if v in adj[u] or u == v:
        return False
    du, dv = len(adj[u]) + 1, len(adj[v]) + 1
    if du > 3 or dv > 3 or (du == 3 and dv == 3):
        return False
    if du == 3 and any(len(adj[w]) == 3 for w in adj[u]):
        return False
    if dv == 3 and any(len(adj[w]) == 3 for w in adj[v]):
        return False
    return True


def indep_deg3_graph(n: int, seed=0, pattern: str = "none", max_edges: int | None = None) -> Multigraph:
    """Random member of the independent-degree-3 class with maximum degree 3.

    ``pattern`` seeds the graph with a triangle or with nothing; with ``none``
    the growth refuses edges that would create a triangle or a K_{2,3}.
    ``K23`` returns K_{2,3} itself, the only connected member containing one.
    """
    if pattern == "K23":
        # the two degree-3 vertices of a K_{2,3} use up their degree and the
        # other three cannot reach degree 3, so K_{2,3} is the only member
        if n != 5:
            raise ValueError("the only connected class member containing K_{2,3} is K_{2,3} itself (order 5)")
        return complete_bipartite(2, 3)
    rng = _rng(seed)
    seeds = {"triangle": [(0, 1), (1, 2), (0, 2)], "none": [(0, 1)]}
    if pattern not in seeds:
        raise ValueError(f"unknown pattern {pattern!r}")
    base = seeds[pattern]
    start = 1 + max(max(e) for e in base)
    if n < start + 1:
        raise ValueError(f"order {n} too small for pattern {pattern}")
    for _ in range(1000):
        adj: dict[int, set[int]] = {v: set() for v in range(start)}
        for u, v in base:
            adj[u].add(v)
            adj[v].add(u)
        ok = True
        for v in range(start, n):
            adj[v] = set()
            choices = [u for u in range(v) if _indep_ok(adj, u, v)]
            if not choices:
                ok = False
                break
            u = rng.choice(choices)
            adj[u].add(v)
            adj[v].add(u)
        if not ok:
            continue
        pairs = list(itertools.combinations(range(n), 2))
        rng.shuffle(pairs)
        m = sum(len(a) for a in adj.values()) // 2
        for u, v in pairs:
            if max_edges is not None and m >= max_edges:
                break
            if rng.random() < 0.5 or not _indep_ok(adj, u, v):
                continue
            adj[u].add(v)
            adj[v].add(u)
            if pattern == "none":
                g = from_edges(n, [(a, b) for a in adj for b in adj[a] if a < b])
                if find_pattern(g, "triangle") or find_pattern(g, "K23"):
                    adj[u].discard(v)
                    adj[v].discard(u)
                    continue
            m += 1
        g = from_edges(n, sorted((a, b) for a in adj for b in adj[a] if a < b))
        if in_indep_deg3_class(g):
            return g
    raise ValueError(f"could not generate an independent-degree-3 graph of order {n}")


def gen_instances(kind: str, params: dict | None = None, seed=0) -> Iterator:
    """Stream of instances of one kind; deterministic under ``seed``."""
    params = dict(params or {})
    count = int(params.pop("count", 1))
    rng = _rng(seed)
    if kind == "random-cnf":
        n, m = int(params.get("n", 3)), int(params.get("m", 2))
        for _ in range(count):
            yield random_cnf(n, m, rng)
    elif kind == "random-connected-graph":
        n, extra = int(params.get("n", 6)), float(params.get("extra", 0.3))
        for _ in range(count):
            yield random_connected_graph(n, extra, rng)
    elif kind == "cubic-catalog":
        n = params.get("n")
        if n is not None:
            for _ in range(count):
                yield random_cubic(int(n), rng)
        else:
            for _, g in cubic_catalog(int(params.get("random", 0)), int(params.get("max_order", 10)), rng):
                yield g
    elif kind == "indep-deg3-class":
        n, pattern = int(params.get("n", 8)), params.get("pattern", "none")
        max_edges = params.get("max_edges")
        for _ in range(count):
            yield indep_deg3_graph(n, rng, pattern, None if max_edges is None else int(max_edges))
    else:
        raise ValueError(f"unknown instance kind {kind!r}")
