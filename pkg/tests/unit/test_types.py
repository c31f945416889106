from fractions import Fraction

import numpy as np
import pytest

from starturan.types import (
    EdgeColoring,
    Graph,
    Hypergraph,
    IncidenceView,
    Mode,
    StarForestSpec,
)


def test_hypergraph_canonical_edges():
    H = Hypergraph(4, [(2, 1, 0), (0, 1, 2), (3, 0, 1)])
    assert H.edges == ((0, 1, 2), (0, 1, 3))
    assert H.m == 2
    assert len(H) == 2
    assert (2, 0, 1) in H
    assert H.edge_index((3, 1, 0)) == 1
    assert H == Hypergraph(4, [(0, 1, 3), (0, 1, 2)])
    assert hash(H) == hash(Hypergraph(4, [(0, 1, 3), (0, 1, 2)]))


@pytest.mark.parametrize(
    "n, edges",
    [
        (3, [(0, 3)]),
        (3, [(0, -1)]),
        (3, [(0, 0, 1)]),
        (3, [(0,)]),
        (-1, []),
    ],
)
def test_hypergraph_rejects_invalid(n, edges):
    with pytest.raises(ValueError):
        Hypergraph(n, edges)


def test_hypergraph_degrees():
    H = Hypergraph(5, [(0, 1, 2), (0, 1, 3)])
    assert np.array_equal(H.degrees(), [2, 2, 1, 1, 0])
    assert H.degree(0) == 2
    assert H.max_degree() == 2
    assert H.average_degree() == Fraction(6, 5)
    assert not H.is_regular(2)
    with pytest.raises(ValueError):
        H.degree(5)
    with pytest.raises(ValueError):
        H.degrees()[0] = 7


def test_uniformity_and_linearity():
    H = Hypergraph(5, [(0, 1, 2), (2, 3, 4)])
    assert H.is_uniform(3)
    assert H.uniformity() == 3
    assert H.is_linear()
    assert not Hypergraph(4, [(0, 1, 2), (0, 1, 3)]).is_linear()
    assert Hypergraph(4, [(0, 1), (0, 1, 2)]).uniformity() is None
    assert Hypergraph(4).uniformity() is None
    assert Hypergraph(4).is_linear()


def test_incidence_matrix_and_graph():
    H = Hypergraph(4, [(0, 1, 2), (1, 2, 3)])
    M = H.incidence_matrix()
    assert M.shape == (2, 4)
    assert M.sum() == 6
    assert np.array_equal(M.toarray()[1], [0, 1, 1, 1])
    G = H.incidence_graph()
    assert G.number_of_nodes() == 6
    assert G.number_of_edges() == 6
    assert G.nodes[("e", 0)]["kind"] == "e"


def test_graph():
    G = Graph(4, [(1, 0), (1, 2)])
    assert G.neighbors(1) == [0, 2]
    assert G.neighbors(3) == []
    nxg = G.to_networkx()
    assert nxg.number_of_nodes() == 4
    assert nxg.number_of_edges() == 2
    with pytest.raises(ValueError):
        Graph(3, [(0, 1, 2)])
    assert isinstance(Graph.from_hypergraph(Hypergraph(2, [(0, 1)])), Graph)


def test_edge_coloring():
    H = Hypergraph(4, [(0, 1), (2, 3), (0, 2)])
    coloring = EdgeColoring(H, {(0, 1): 0, (3, 2): 0, (0, 2): 1})
    assert coloring[(2, 3)] == 0
    assert coloring.num_colors == 2
    assert coloring.color_classes() == {0: [(0, 1), (2, 3)], 1: [(0, 2)]}
    assert coloring.is_proper()
    assert not EdgeColoring(H, {(0, 1): 0, (2, 3): 0, (0, 2): 0}).is_proper()
    assert not EdgeColoring(H, {(0, 1): 0}).is_proper()


def test_star_forest_spec():
    spec = StarForestSpec.from_string("3,2,2")
    assert spec.k == 3
    assert spec.d(1) == 3
    assert spec.d(3) == 2
    assert spec.num_vertices() == 10
    assert spec.num_edges() == 7
    assert str(spec) == "3,2,2"
    assert list(spec) == [3, 2, 2]
    assert spec == StarForestSpec([3, 2, 2])
    assert not spec.is_matching()
    assert StarForestSpec([1, 1]).is_matching()
    with pytest.raises(ValueError):
        spec.d(4)


@pytest.mark.parametrize("text", ["2,3", "", "0", "2,a", "1,2,1"])
def test_star_forest_spec_rejects(text):
    with pytest.raises(ValueError):
        StarForestSpec.from_string(text)


def test_incidence_view_stack():
    view = IncidenceView(5, [(0, 1, 2)])
    h = view.add_edge((1, 2, 3))
    assert h == 1
    assert view.m == 2
    assert view.degree(1) == 2
    assert view.pair_edges(1, 2) == [0, 1]
    assert view.pair_edges(0, 3) == []
    assert view.shadow_neighbors(1) == [0, 2, 3]
    assert view.pop_edge() == (1, 2, 3)
    assert view.degree(3) == 0
    assert view.to_hypergraph() == Hypergraph(5, [(0, 1, 2)])


def test_mode_values():
    assert Mode("berge") is Mode.BERGE
    with pytest.raises(ValueError):
        Mode("induced")
