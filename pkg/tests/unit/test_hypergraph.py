import pytest

from starturan.hypergraph import (
    cartesian_product,
    clique_hypergraph,
    complete_uniform,
    count_cliques,
    disjoint_union,
    disjoint_union_all,
    from_text,
    grid_lines,
    lattice_hypergraph,
    load_hypergraph,
    make_hypergraph,
    random_uniform_hypergraph,
    save_hypergraph,
    to_text,
)
from starturan.types import Graph, Hypergraph


@pytest.mark.parametrize("r", [2, 3, 4])
@pytest.mark.parametrize("d", [1, 2, 3])
def test_lattice_hypergraph(r, d):
    H, coloring = lattice_hypergraph(r, d)
    assert H.n == r**d
    assert H.m == d * r ** (d - 1)
    assert H.is_uniform(r)
    assert H.is_linear()
    assert H.is_regular(d)
    assert coloring.num_colors == d
    assert coloring.is_proper()
    for members in coloring.color_classes().values():
        assert len(members) * r == H.n


@pytest.mark.parametrize("r, d", [(1, 2), (2, 0), (2, 40)])
def test_lattice_hypergraph_rejects(r, d):
    with pytest.raises(ValueError):
        lattice_hypergraph(r, d)


def test_grid_lines_row_major():
    lines = grid_lines((2, 3))
    assert lines == [
        ((0, 3), 0),
        ((1, 4), 0),
        ((2, 5), 0),
        ((0, 1, 2), 1),
        ((3, 4, 5), 1),
    ]
    assert grid_lines((1, 2)) == [((0, 1), 1)]
    assert grid_lines((1, 2), include_trivial=True) == [
        ((0,), 0),
        ((1,), 0),
        ((0, 1), 1),
    ]


def test_disjoint_union():
    U = disjoint_union(Graph(2, [(0, 1)]), Graph(3, [(0, 2)]))
    assert isinstance(U, Graph)
    assert U.n == 5
    assert U.edges == ((0, 1), (2, 4))
    mixed = disjoint_union(Hypergraph(3, [(0, 1, 2)]), Graph(2, [(0, 1)]))
    assert not isinstance(mixed, Graph)
    assert mixed.edges == ((0, 1, 2), (3, 4))
    assert disjoint_union_all([]).n == 0


def test_cartesian_product_of_edges_is_a_cycle():
    K2 = Graph(2, [(0, 1)])
    P = cartesian_product(K2, K2)
    assert P.n == 4
    assert P.edges == ((0, 1), (0, 2), (1, 3), (2, 3))


def test_cartesian_product_builds_lattices():
    line, _ = lattice_hypergraph(3, 1)
    square, _ = lattice_hypergraph(3, 2)
    assert cartesian_product(line, line) == square


def test_make_hypergraph():
    H = make_hypergraph(5, [[3, 1, 0], (0, 1, 3), [4, 2]])
    assert H.n == 5
    assert H.edges == ((0, 1, 3), (2, 4))
    assert H == Hypergraph(5, [(0, 1, 3), (2, 4)])
    for n, edges in [(3, [[0, 3]]), (3, [[1, 1, 2]]), (3, [[2]])]:
        with pytest.raises(ValueError):
            make_hypergraph(n, edges)


def test_complete_uniform():
    assert complete_uniform(5, 3).m == 10
    assert complete_uniform(2, 3).m == 0
    with pytest.raises(ValueError):
        complete_uniform(4, 1)


def test_clique_hypergraph():
    K4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    triangles = clique_hypergraph(K4, 3)
    assert triangles.m == 4
    assert triangles.is_uniform(3)
    assert count_cliques(K4, 2) == 6
    assert count_cliques(K4, 4) == 1
    assert count_cliques(Graph(4, [(0, 1), (2, 3)]), 3) == 0


@pytest.mark.parametrize(
    "G",
    [
        Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
        Graph(6, [(0, 1), (0, 2), (1, 2), (4, 5)]),
        Graph(3, []),
    ],
)
def test_clique_hypergraph_of_edges_is_the_graph(G):
    assert clique_hypergraph(G, 2) == G


def test_random_uniform_hypergraph_is_seeded():
    H = random_uniform_hypergraph(8, 3, 10, rng=1)
    assert H.m == 10
    assert H.is_uniform(3)
    assert H == random_uniform_hypergraph(8, 3, 10, rng=1)
    with pytest.raises(ValueError):
        random_uniform_hypergraph(4, 3, 5)


def test_text_format():
    H = Hypergraph(4, [(2, 1, 0), (1, 3)])
    text = to_text(H)
    assert text == "h 4 2\ne 0 1 2\ne 1 3\n"
    assert from_text(text) == H
    commented = "# a comment\n\nh 4 2   # header\ne 0 1 2\n\ne 3 1\n"
    assert from_text(commented) == H
    assert from_text("h 3 0\n") == Hypergraph(3)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "h 3\n",
        "h x 1\ne 0 1\n",
        "e 0 1\n",
        "h 3 2\ne 0 1\n",
        "h 3 1\nx 0 1\n",
        "h 3 1\ne 0 a\n",
        "h 3 2\ne 0 1\ne 1 0\n",
        "h 3 1\ne 0 5\n",
        "h 3 1\ne 0 0\n",
    ],
)
def test_text_format_rejects(text):
    with pytest.raises(ValueError):
        from_text(text)


def test_save_and_load(tmp_path):
    H, _ = lattice_hypergraph(3, 2)
    path = str(tmp_path / "lattice.txt")
    save_hypergraph(H, path)
    assert load_hypergraph(path) == H
    with pytest.raises(OSError):
        load_hypergraph(str(tmp_path / "missing.txt"))
