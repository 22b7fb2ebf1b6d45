"""Graph-level decisions and exact parameter computation."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .cuts import (
    EdgeColoring,
    EdgeCutCertificate,
    VertexColoring,
    VertexCutCertificate,
    find_matching_cut,
    find_proper_edge_cut,
    find_rainbow_vertex_cut,
)
from .graph import GraphError, Multigraph, block_decomposition, is_connected

DEFAULT_MAX_EDGES = 16
DEFAULT_MAX_VERTICES = 8
DEFAULT_MAX_CHROMATIC_EDGES = 40


class BudgetExceeded(RuntimeError):
    """The instance is larger than the configured exact-search budget."""


class VerificationError(RuntimeError):
    """An internally produced answer failed its own verification."""


Pair = tuple[int, int]


@dataclass
class DisconnectionCheck:
    ok: bool
    certificates: dict[Pair, object] = field(default_factory=dict)
    failing_pair: Pair | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class PdResult:
    value: int
    witness: EdgeColoring
    certificates: dict[Pair, EdgeCutCertificate]


@dataclass
class RvdResult:
    value: int
    witness: VertexColoring
    certificates: dict[Pair, VertexCutCertificate]


def _require_connected(g: Multigraph) -> None:
    if g.n < 2:
        raise GraphError("graph must be nontrivial")
    if not is_connected(g):
        raise GraphError("graph must be connected")


def is_proper_disconnected(g: Multigraph, coloring: EdgeColoring) -> DisconnectionCheck:
    """Whether every vertex pair has a proper edge-cut; stops at the first failure."""
    _require_connected(g)
    certs: dict[Pair, object] = {}
    for x, y in combinations(g.vertices, 2):
        cert = find_proper_edge_cut(g, coloring, x, y)
        if cert is None:
            return DisconnectionCheck(False, certs, (x, y))
        certs[(x, y)] = cert
    return DisconnectionCheck(True, certs)


def is_rainbow_vertex_disconnected(g: Multigraph, coloring: VertexColoring) -> DisconnectionCheck:
    _require_connected(g)
    certs: dict[Pair, object] = {}
    for x, y in combinations(g.vertices, 2):
        cert = find_rainbow_vertex_cut(g, coloring, x, y)
        if cert is None:
            return DisconnectionCheck(False, certs, (x, y))
        certs[(x, y)] = cert
    return DisconnectionCheck(True, certs)


def pd_is_one(g: Multigraph) -> DisconnectionCheck:
    """pd(g) = 1 exactly when every pair is separated by a matching cut."""
    _require_connected(g)
    certs: dict[Pair, object] = {}
    for x, y in combinations(g.vertices, 2):
        cert = find_matching_cut(g, x, y)
        if cert is None:
            return DisconnectionCheck(False, certs, (x, y))
        certs[(x, y)] = cert
    return DisconnectionCheck(True, certs)


# -- pd -------------------------------------------------------------------


def _bonds(g: Multigraph) -> list[int]:
    """Vertex bitmasks X (containing the first vertex) with both X and V-X connected.

    Every proper edge-cut contains the boundary of such a set separating
    the same pair, so these boundaries are all the search has to track.
    """
    n = g.n
    idx = {v: i for i, v in enumerate(g.vertices)}
    nbr = [0] * n
    for e in g.edges:
        nbr[idx[e.u]] |= 1 << idx[e.v]
        nbr[idx[e.v]] |= 1 << idx[e.u]
    full = (1 << n) - 1

    def connected(mask: int) -> bool:
        if not mask:
            return False
        seen = mask & -mask
        frontier = seen
        while frontier:
            i = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = nbr[i] & mask & ~seen
            seen |= new
            frontier |= new
        return seen == mask

    out = []
    for rest in range(1 << (n - 1)):
        mask = 1 | (rest << 1)
        if mask != full and connected(mask) and connected(full & ~mask):
            out.append(mask)
    return out


def _search_pd_coloring(g: Multigraph, k: int, bonds: list[int]) -> dict[int, int] | None:
    """Canonical k-colorings of the edges, pruned on dead pairs.

    A bond dies once two adjacent boundary edges share a color; a pair dies
    once every bond separating it is dead. Colorings are generated as
    restricted growth strings over ascending edge ids, so color relabelings
    are visited once.
    """
    idx = {v: i for i, v in enumerate(g.vertices)}
    edges = list(g.edges)
    m = len(edges)
    n = g.n
    ends = [(idx[e.u], idx[e.v]) for e in edges]
    pair_index = {}
    for a, b in combinations(range(n), 2):
        pair_index[(a, b)] = len(pair_index)
    alive_count = [0] * len(pair_index)
    bond_pairs: list[list[int]] = []
    partners: list[list[tuple[int, list[int]]]] = [[] for _ in range(m)]
    for bi, mask in enumerate(bonds):
        inside = [i for i in range(n) if mask >> i & 1]
        outside = [i for i in range(n) if not mask >> i & 1]
        ps = [pair_index[(min(a, b), max(a, b))] for a in inside for b in outside]
        bond_pairs.append(ps)
        for p in ps:
            alive_count[p] += 1
        boundary = [j for j, (u, v) in enumerate(ends) if (mask >> u & 1) != (mask >> v & 1)]
        for j in boundary:
            u, v = ends[j]
            adj = [i for i in boundary if i != j and (u in ends[i] or v in ends[i])]
            partners[j].append((bi, adj))
    if any(c == 0 for c in alive_count):
        return None
    alive = [True] * len(bonds)
    color = [0] * m
    trail: list[int] = []

    def kill(bi: int) -> bool:
        alive[bi] = False
        trail.append(bi)
        ok = True
        for p in bond_pairs[bi]:
            alive_count[p] -= 1
            if alive_count[p] == 0:
                ok = False
        return ok

    def undo(mark: int) -> None:
        while len(trail) > mark:
            bi = trail.pop()
            alive[bi] = True
            for p in bond_pairs[bi]:
                alive_count[p] += 1

    def search(i: int, top: int) -> bool:
        if i == m:
            return True
        for c in range(1, min(top + 1, k) + 1):
            color[i] = c
            mark = len(trail)
            ok = True
            for bi, adj in partners[i]:
                if alive[bi] and any(color[j] == c for j in adj if j < i):
                    if not kill(bi):
                        ok = False
                        break
            if ok and search(i + 1, max(top, c)):
                return True
            undo(mark)
        color[i] = 0
        return False

    if not search(0, 0):
        return None
    return {edges[i].id: color[i] for i in range(m)}


def pd_exact(g: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> PdResult:
    """The proper disconnection number with a verified witness coloring."""
    _require_connected(g)
    if not g.is_simple():
        raise GraphError("pd_exact expects a simple graph")
    if g.m > max_edges:
        raise BudgetExceeded(f"{g.m} edges exceed the pd budget of {max_edges}")
    one = EdgeColoring.constant(g, 1)
    check = is_proper_disconnected(g, one)
    if check:
        return PdResult(1, one, check.certificates)
    bonds = _bonds(g)
    for k in range(2, g.max_degree() + 2):
        colors = _search_pd_coloring(g, k, bonds)
        if colors is None:
            continue
        witness = EdgeColoring(k, colors)
        check = is_proper_disconnected(g, witness)
        if not check:
            raise VerificationError(f"pd search produced a coloring failing at {check.failing_pair}")
        return PdResult(k, witness, check.certificates)
    raise VerificationError("no proper disconnection coloring up to max degree + 1 colors")


def pd_via_blocks(g: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> int:
    """Maximum of pd over the blocks of ``g``."""
    _require_connected(g)
    best = 1
    for block in block_decomposition(g).blocks:
        if len(block.vertices) <= 2:
            continue
        best = max(best, pd_exact(g.edge_subgraph(block.edges), max_edges).value)
    return best


# -- rvd ------------------------------------------------------------------


def _restricted_growth(n: int, k: int):
    """Color vectors over ``n`` items using exactly ``k`` colors, canonical form."""
    vec = [0] * n

    def rec(i: int, top: int):
        if n - i < k - top:
            return
        if i == n:
            if top == k:
                yield list(vec)
            return
        for c in range(1, min(top + 1, k) + 1):
            vec[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(0, 0)


def rvd_exact(g: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> RvdResult:
    """The rainbow vertex-disconnection number by exhausting canonical colorings."""
    _require_connected(g)
    if g.n > max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceed the rvd budget of {max_vertices}")
    vs = g.vertices
    for k in range(1, g.n + 1):
        for vec in _restricted_growth(g.n, k):
            coloring = VertexColoring(k, dict(zip(vs, vec)))
            check = is_rainbow_vertex_disconnected(g, coloring)
            if check:
                return RvdResult(k, coloring, check.certificates)
    raise VerificationError("no rainbow vertex-disconnection coloring found")


# -- chromatic index ---------------------------------------------------------


def proper_edge_coloring(g: Multigraph, k: int) -> dict[int, int] | None:
    """A proper k-edge-coloring by backtracking over ascending edge ids."""
    edges = list(g.edges)
    at: dict[int, set[int]] = {v: set() for v in g.vertices}
    color: dict[int, int] = {}

    def search(i: int, top: int) -> bool:
        if i == len(edges):
            return True
        e = edges[i]
        for c in range(1, min(top + 1, k) + 1):
            if c in at[e.u] or c in at[e.v]:
                continue
            at[e.u].add(c)
            at[e.v].add(c)
            color[e.id] = c
            if search(i + 1, max(top, c)):
                return True
            at[e.u].discard(c)
            at[e.v].discard(c)
            del color[e.id]
        return False

    return dict(color) if search(0, 0) else None


def chromatic_index(g: Multigraph, max_edges: int = DEFAULT_MAX_CHROMATIC_EDGES) -> int:
    if not g.is_simple():
        raise GraphError("chromatic_index expects a simple graph")
    if g.m > max_edges:
        raise BudgetExceeded(f"{g.m} edges exceed the chromatic index budget of {max_edges}")
    if g.m == 0:
        return 0
    delta = g.max_degree()
    for k in range(delta, delta + 2):
        if proper_edge_coloring(g, k) is not None:
            return k
    raise VerificationError("no proper edge coloring with max degree + 1 colors")
