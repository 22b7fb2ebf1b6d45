import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from colordisconnect.graph import Multigraph, from_edges


def to_graph(G: nx.Graph) -> Multigraph:
    G = nx.convert_node_labels_to_integers(G)
    return from_edges(G.number_of_nodes(), sorted(tuple(sorted(e)) for e in G.edges()))


def to_nx(g: Multigraph) -> nx.MultiGraph:
    H = nx.MultiGraph()
    H.add_nodes_from(g.vertices)
    H.add_edges_from((e.u, e.v, e.id) for e in g.edges)
    return H


def atlas(max_nodes: int, connected: bool = True):
    """Every graph of the networkx atlas up to ``max_nodes`` vertices (max 7)."""
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() > max_nodes:
            break
        if G.number_of_nodes() < 2 or (connected and not nx.is_connected(G)):
            continue
        yield to_graph(G)


@st.composite
def connected_graphs(draw, min_n=2, max_n=7, parallel=False):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.35:
                edges.append((u, v))
    if parallel:
        edges += [e for e in edges if rng.random() < 0.2]
    edges = sorted(set(edges)) if not parallel else sorted(edges)
    return from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20261018)
