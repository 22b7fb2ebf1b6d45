import itertools
import random

import pytest

from conftest import atlas
from colordisconnect.constructive import (
    classify_indep_deg3,
    color_3regular,
    color_3regular_bridgeless,
    color_max_deg3,
    h_gadget,
    in_indep_deg3_class,
    matching_cut_indep_deg3,
)
from colordisconnect.cuts import EdgeColoring, EdgeCutCertificate, find_matching_cut, verify_matching_cut, verify_proper_edge_cut
from colordisconnect.generators import (
    complete_bipartite,
    complete_graph,
    cubic_catalog,
    cycle_graph,
    indep_deg3_graph,
    petersen,
    prism,
    random_connected_graph,
    random_cubic,
    random_tree,
    subdivided_k4,
)
from colordisconnect.graph import GraphBuilder, GraphError, bridges, from_edges, perfect_matching
from colordisconnect.solvers import is_proper_disconnected, pd_exact


def _two_colored(g, coloring):
    assert coloring.used() <= {1, 2}
    assert is_proper_disconnected(g, coloring)


def test_h_gadget_shape():
    h = h_gadget()
    degrees = {v: h.graph.degree(v) for v in h.graph.vertices}
    assert degrees.pop(h.key_vertex) == 2
    assert set(degrees.values()) == {3}


def test_bridgeless_examples():
    for g in (complete_graph(4), petersen(), prism()):
        coloring, trace = color_3regular_bridgeless(g)
        _two_colored(g, coloring)
        assert trace.replay(g.edge_ids) == dict(coloring.colors)


def test_petersen_needs_no_triangle_recoloring():
    _, trace = color_3regular_bridgeless(petersen())
    assert not any(step.op == "triangle" for step in trace.steps)
    g = petersen()
    rest = g.without_edges(perfect_matching(g))
    assert all(rest.degree(v) == 2 for v in rest.vertices)


def test_prism_uses_stored_coloring_under_relabeling():
    rng = random.Random(2)
    base = prism()
    for _ in range(10):
        perm = list(range(6))
        rng.shuffle(perm)
        edges = [(perm[e.u], perm[e.v]) for e in base.edges]
        rng.shuffle(edges)
        g = from_edges(6, edges)
        coloring, trace = color_3regular_bridgeless(g)
        assert trace.steps[0].op == "prism"
        _two_colored(g, coloring)


def test_bridgeless_preconditions():
    with pytest.raises(GraphError):
        color_3regular_bridgeless(cycle_graph(5))


def _bridged_cubic():
    """Two copies of K4 minus an edge, each closed by a degree-2 vertex, joined by a bridge."""
    b = GraphBuilder()
    ends = []
    for _ in range(2):
        q = [b.add_vertex() for _ in range(4)]
        for i, j in ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)):
            b.add_edge(q[i], q[j])
        w = b.add_vertex()
        b.add_edge(q[0], w)
        b.add_edge(q[3], w)
        ends.append(w)
    b.add_edge(*ends)
    return b.build()


def test_color_3regular_examples():
    g = _bridged_cubic()
    assert len(bridges(g)) == 1
    for h in (complete_graph(4), g, complete_bipartite(3, 3)):
        coloring, trace = color_3regular(h)
        _two_colored(h, coloring)
        assert trace.replay(h.edge_ids) == dict(coloring.colors)


def test_color_3regular_on_random_cubic_graphs():
    rng = random.Random(5)
    for _ in range(30):
        g = random_cubic(rng.choice([4, 6, 8, 10, 12]), rng)
        coloring, _ = color_3regular(g)
        _two_colored(g, coloring)


def test_color_max_deg3_examples():
    c4_pendant = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    _two_colored(c4_pendant, color_max_deg3(c4_pendant)[0])
    k4_coloring, _ = color_max_deg3(complete_graph(4))
    assert k4_coloring.used() == {1, 2}
    tree = random_connected_graph(9, 0.0, 3, max_degree=3)
    coloring, _ = color_max_deg3(tree)
    assert coloring.used() == {1}


def test_color_max_deg3_on_every_small_graph():
    for g in atlas(7):
        if g.max_degree() <= 3:
            _two_colored(g, color_max_deg3(g)[0])


def test_color_max_deg3_preconditions():
    with pytest.raises(GraphError):
        color_max_deg3(complete_graph(5))
    with pytest.raises(GraphError):
        color_max_deg3(from_edges(4, [(0, 1), (2, 3)]))


def test_restriction_soundness():
    """Certificates found in the cubic completion, cut down to the original
    edges, still verify in the original graph."""
    rng = random.Random(8)
    for _ in range(10):
        g = random_connected_graph(8, 0.25, rng, max_degree=3)
        coloring, trace = color_max_deg3(g)
        full = trace.replay()
        big_edges = {e for step in trace.steps if step.op == "attach-gadget" for e in step.edges}
        if not big_edges:
            continue
        b = GraphBuilder(g)
        for step in trace.steps:
            if step.op == "attach-gadget":
                u, *new = step.vertices
                for w in new:
                    b.add_vertex(vid=w)
        # rebuild G'' from the gadget edges recorded in the trace
        gadget_ends = {}
        for step in trace.steps:
            if step.op == "attach-gadget":
                u, *new = step.vertices
                gadget_ends.update(_gadget_edges(u, new, step.edges))
        for eid, (x, y) in gadget_ends.items():
            b.add_edge(x, y, eid=eid)
        big = b.build()
        from colordisconnect.cuts import find_proper_edge_cut

        big_col = EdgeColoring(2, {e: full.get(e, 1) for e in big.edge_ids})
        for x, y in itertools.combinations(g.vertices, 2):
            cert = find_proper_edge_cut(big, big_col, x, y)
            assert cert is not None
            small = EdgeCutCertificate((x, y), frozenset(e for e in cert.cut if g.has_edge_id(e)))
            assert verify_proper_edge_cut(g, coloring, small)


def _gadget_edges(u, new, edges):
    gadget = h_gadget()
    remap = dict(zip(gadget.graph.vertices, new))
    pairs = [(remap[e.u], remap[e.v]) for e in gadget.graph.edges] + [(remap[gadget.key_vertex], u)]
    return dict(zip(edges, pairs))


def test_matching_cut_casework_examples():
    star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    built = matching_cut_indep_deg3(star, 0, 1)
    assert verify_matching_cut(star, built.certificate) and not built.fallback
    c6 = from_edges(7, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6)])
    built = matching_cut_indep_deg3(c6, 0, 3)
    assert verify_matching_cut(c6, built.certificate) and not built.fallback
    g = subdivided_k4()
    for x, y in itertools.combinations(g.vertices, 2):
        built = matching_cut_indep_deg3(g, x, y)
        assert verify_matching_cut(g, built.certificate)
        assert not built.fallback
        assert find_matching_cut(g, x, y) is not None


def test_matching_cut_casework_never_needs_fallback():
    graphs = [g for g in atlas(7) if in_indep_deg3_class(g)]
    graphs += [indep_deg3_graph(n, s) for n in (8, 10, 12) for s in range(8)]
    checked = 0
    for g in graphs:
        if classify_indep_deg3(g).value == 2:
            continue
        for x, y in itertools.combinations(g.vertices, 2):
            built = matching_cut_indep_deg3(g, x, y)
            assert verify_matching_cut(g, built.certificate)
            assert not built.fallback, (g.triples(), x, y, built.case)
            checked += 1
    assert checked > 300


def test_matching_cut_casework_preconditions():
    with pytest.raises(GraphError):
        matching_cut_indep_deg3(complete_bipartite(2, 3), 0, 1)
    with pytest.raises(GraphError):
        matching_cut_indep_deg3(complete_graph(4), 0, 1)


def test_classify_examples():
    assert classify_indep_deg3(subdivided_k4()).value == 1
    assert pd_exact(subdivided_k4(), max_edges=12).value == 1
    res = classify_indep_deg3(complete_bipartite(2, 3))
    assert res.value == 2 and res.pattern == "K23"
    with pytest.raises(GraphError):
        classify_indep_deg3(cycle_graph(3))


def test_cubic_catalog_pd_at_most_two():
    for name, g in cubic_catalog():
        if g.m <= 16:
            assert pd_exact(g).value <= 2, name
