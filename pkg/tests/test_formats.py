import pytest

from colordisconnect.cuts import EdgeColoring, VertexColoring
from colordisconnect.formats import (
    FormatError,
    emit_artifact,
    emit_artifact_dot,
    emit_dimacs,
    emit_dot,
    emit_edge_list,
    parse_dimacs,
    parse_dot,
    parse_edge_list,
    parse_graph_file,
)
from colordisconnect.generators import gen_instances, petersen, random_cnf
from colordisconnect.reductions import build_Gphi_rvd, build_Hphi_prime, pad_with_path


def test_dimacs_round_trip():
    text = "c example\np cnf 3 2\n1 -2 3 0\n-1 2\n2 0\n"
    phi = parse_dimacs(text)
    assert phi.n == 3 and phi.to_ints() == [[1, -2, 3], [-1, 2, 2]]
    assert parse_dimacs(emit_dimacs(phi)).to_ints() == phi.to_ints()


@pytest.mark.parametrize(
    "text",
    [
        "1 2 3 0\n",
        "p cnf 2 1\n1 2 3 0\n",
        "p cnf 3 2\n1 2 3 0\n",
        "p cnf 3 1\n1 2 0\n",
        "p cnf 3 1\n1 2 3\n",
        "p cnf x 1\n",
        "p cnf 3 1\n1 a 3 0\n",
    ],
)
def test_dimacs_errors(text):
    with pytest.raises(FormatError):
        parse_dimacs(text)


def test_edge_list_parsing():
    text = "p graph 3 3\n1 2\n2 3\n1 3\nc edgecolor 1 2\nc edgecolor 2 1\nc edgecolor 3 1\nc terminal u 1\nc terminal v 3\nc label 2 mid\n"
    gf = parse_graph_file(text)
    assert gf.graph.n == 3 and gf.graph.m == 3
    assert gf.edge_coloring[0] == 2
    assert gf.terminal_pair() == (0, 2)
    assert gf.graph.vertex("mid") == 1


@pytest.mark.parametrize(
    "text",
    [
        "1 2\n",
        "p graph 2 2\n1 2\n",
        "p graph 2 1\n1 3\n",
        "p graph 2 1\n1 2 3\n",
        "p graph 2 1\n1 2\nc edgecolor 4 1\n",
        "p graph 2 1\n1 1\n",
        "p graph 2 1\nx 2\n",
    ],
)
def test_edge_list_errors(text):
    with pytest.raises(FormatError):
        parse_graph_file(text)


def test_edge_list_round_trip_with_colorings():
    g = petersen()
    ec = EdgeColoring(2, {e: 1 + e % 2 for e in g.edge_ids})
    vc = VertexColoring(3, {v: 1 + v % 3 for v in g.vertices})
    gf = parse_graph_file(emit_edge_list(g, ec, vc, {"s": 0, "t": 7}))
    assert gf.graph.triples() == g.triples()
    assert gf.edge_coloring.colors == ec.colors
    assert gf.vertex_coloring.colors == vc.colors
    assert gf.terminals == {"s": 0, "t": 7}


def test_dot_round_trip():
    g = petersen()
    ec = EdgeColoring(2, {e: 1 + e % 2 for e in g.edge_ids})
    gf = parse_dot(emit_dot(g, ec, terminals={"u": 3}))
    assert gf.graph.triples() == g.triples()
    assert gf.edge_coloring.colors == ec.colors
    assert gf.terminals == {"u": 3}
    with pytest.raises(FormatError):
        parse_dot("graph G {\n  1 -> 2;\n}\n")


def test_artifact_round_trips():
    for art in (pad_with_path(build_Hphi_prime(random_cnf(2, 1, 3)), 3), build_Gphi_rvd(random_cnf(2, 2, 3))):
        gf = parse_graph_file(emit_artifact(art))
        assert gf.graph.n == art.graph.n and gf.graph.m == art.graph.m
        assert len(gf.terminals) == 2
        dot = parse_dot(emit_artifact_dot(art))
        assert dot.graph.m == art.graph.m
        if art.edge_coloring is not None:
            assert sorted(gf.edge_coloring.colors.values()) == sorted(art.edge_coloring.colors.values())
        else:
            assert gf.terminals.keys() == {"s", "t"}
            assert sorted(gf.vertex_coloring.colors.values()) == sorted(art.vertex_coloring.colors.values())


def test_generated_instances_round_trip():
    for g in gen_instances("random-connected-graph", {"n": 7, "count": 5}, seed=1):
        assert parse_edge_list(emit_edge_list(g)).triples() == g.triples()
    for phi in gen_instances("random-cnf", {"n": 4, "m": 3, "count": 5}, seed=1):
        assert parse_dimacs(emit_dimacs(phi)).to_ints() == phi.to_ints()
