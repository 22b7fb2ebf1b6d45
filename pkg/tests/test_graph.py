import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

import oracles
from conftest import atlas, connected_graphs, to_nx
from colordisconnect.generators import complete_bipartite, complete_graph, cycle_graph, petersen, random_connected_graph
from colordisconnect.graph import (
    GraphBuilder,
    GraphError,
    Multigraph,
    block_decomposition,
    bridges,
    build_graph,
    components,
    find_pattern,
    from_edges,
    is_matching,
    perfect_matching,
    strip_pendants,
)


def test_build_graph_single_edge():
    g = build_graph([("a", "b")])
    assert (g.n, g.m) == (2, 1)
    assert g.label(0) == "a" and g.vertex("b") == 1


def test_build_graph_triangle():
    g = build_graph([("a", "b"), ("b", "c"), ("c", "a")])
    assert g.max_degree() == 2 and g.is_simple()


def test_build_graph_parallel_pair():
    g = build_graph([("a", "b"), ("a", "b")], allow_parallel=True)
    assert list(g.parallel_classes().values()) == [[0, 1]]
    assert not g.is_simple()


def test_build_graph_rejects_loops_and_duplicates():
    with pytest.raises(GraphError):
        build_graph([("a", "a")])
    with pytest.raises(GraphError):
        build_graph([("a", "b"), ("b", "a")])


def test_multigraph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Multigraph([0, 1], [(0, 0, 5)])
    with pytest.raises(GraphError):
        Multigraph([0, 1], [(0, 0, 1), (0, 1, 0)])


def test_builder_keeps_ids():
    b = GraphBuilder()
    u, v = b.add_vertex(vid=7), b.add_vertex(vid=3)
    e = b.add_edge(u, v, eid=11)
    g = b.build()
    assert g.vertices == (3, 7) and g.edge(e).ends in ((7, 3), (3, 7))


def test_components():
    assert components(from_edges(2, [(0, 1)])) == [[0, 1]]
    two = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert components(two) == [[0, 1, 2], [3, 4, 5]]
    assert components(Multigraph([], [])) == []


def test_bridges_examples():
    assert bridges(from_edges(3, [(0, 1), (1, 2)])) == {0, 1}
    assert bridges(cycle_graph(4)) == set()
    joined = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    assert bridges(joined) == {6}


def test_parallel_edge_is_never_a_bridge():
    g = Multigraph([0, 1, 2], [(0, 0, 1), (1, 0, 1), (2, 1, 2)])
    assert bridges(g) == {2}


def test_block_decomposition_examples():
    g = from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    bd = block_decomposition(g)
    assert sorted(len(b.vertices) for b in bd.blocks) == [2, 3]
    assert bd.cut_vertices == {2}
    tree = from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert all(b.is_k2 for b in block_decomposition(tree).blocks)
    assert len(block_decomposition(petersen()).blocks) == 1
    with pytest.raises(GraphError):
        block_decomposition(from_edges(4, [(0, 1), (2, 3)]))


def test_blocks_and_bridges_against_networkx():
    rng = random.Random(1)
    for _ in range(100):
        g = random_connected_graph(rng.randint(2, 8), rng.random() * 0.5, rng)
        bd = block_decomposition(g)
        H = to_nx(g)
        expected_blocks = {frozenset(c) for c in nx.biconnected_components(nx.Graph(H))}
        assert {b.vertices for b in bd.blocks} == expected_blocks
        assert bd.cut_vertices == set(nx.articulation_points(nx.Graph(H)))
        k2_bridges = {next(iter(b.edges)) for b in bd.blocks if b.is_k2}
        assert bridges(g) == k2_bridges
        covered = sorted(e for b in bd.blocks for e in b.edges)
        assert covered == sorted(g.edge_ids)


def test_perfect_matching_examples():
    assert len(perfect_matching(complete_graph(4))) == 2
    assert perfect_matching(cycle_graph(5)) is None
    pm = perfect_matching(petersen())
    assert len(pm) == 5 and is_matching(petersen(), pm)


def test_perfect_matching_matches_exhaustive_enumeration():
    graphs = list(atlas(7, connected=False)) + [random_connected_graph(8, 0.3, s) for s in range(30)]
    for g in graphs:
        pm = perfect_matching(g)
        assert (pm is not None) == oracles.has_perfect_matching(g)
        if pm is not None:
            assert is_matching(g, pm) and 2 * len(pm) == g.n


def test_strip_pendants_examples():
    core, removed = strip_pendants(from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    assert core.n == 1 and len(removed) == 3
    core, _ = strip_pendants(from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]))
    assert core.vertices == (0, 1, 2)
    c5 = cycle_graph(5)
    assert strip_pendants(c5)[0] == c5


@given(connected_graphs())
@settings(max_examples=60, deadline=None)
def test_strip_pendants_is_idempotent(g):
    core, _ = strip_pendants(g)
    again, removed = strip_pendants(core)
    assert again == core and removed == []


def test_find_pattern_examples():
    assert len(find_pattern(complete_graph(4), "triangle")) == 3
    a, b, *cs = find_pattern(complete_bipartite(2, 3), "K23")
    assert {a, b} == {0, 1} and len(cs) == 3
    c6 = cycle_graph(6)
    assert find_pattern(c6, "triangle") is None and find_pattern(c6, "K23") is None


def test_find_pattern_against_networkx():
    for g in atlas(6):
        H = nx.Graph(to_nx(g))
        has_tri = any(nx.triangles(H).values())
        assert (find_pattern(g, "triangle") is not None) == has_tri
        has_k23 = any(len(set(H[a]) & set(H[b])) >= 3 for a, b in itertools.combinations(H, 2))
        assert (find_pattern(g, "K23") is not None) == has_k23


@given(connected_graphs(parallel=True))
@settings(max_examples=60, deadline=None)
def test_degree_sum(g):
    assert sum(g.degree(v) for v in g.vertices) == 2 * g.m
