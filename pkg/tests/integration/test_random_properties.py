import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starturan.hypergraph import (
    cartesian_product,
    clique_hypergraph,
    count_cliques,
    lattice_hypergraph,
)
from starturan.patterns import adl_bound, contains, star_forest, verify_adl
from starturan.types import Graph, Hypergraph, Mode


@st.composite
def triple_systems(draw):
    n = draw(st.integers(min_value=4, max_value=9))
    triples = list(itertools.combinations(range(n), 3))
    chosen = draw(st.sets(st.sampled_from(triples), min_size=1, max_size=12))
    return Hypergraph(n, chosen)


@settings(max_examples=200, deadline=None)
@given(H=triple_systems(), data=st.data())
def test_average_degree_lemma(H, data):
    Delta = H.max_degree()
    d = data.draw(st.integers(min_value=0, max_value=Delta))
    eps = Fraction(data.draw(st.integers(min_value=0, max_value=9)), 10)
    assert verify_adl(H, d, eps, Delta)
    if H.average_degree() >= d - eps:
        low = int(np.count_nonzero(H.degrees() < d))
        assert low <= adl_bound(Delta, d, eps, H.n)


def random_linear_hypergraph(rng: np.random.Generator, n: int, r: int) -> Hypergraph:
    covered = set()
    edges = []
    for _ in range(3 * n):
        e = tuple(sorted(rng.choice(n, size=r, replace=False).tolist()))
        pairs = set(itertools.combinations(e, 2))
        if pairs & covered:
            continue
        covered |= pairs
        edges.append(e)
    return Hypergraph(n, edges)


def test_products_of_linear_hypergraphs_are_linear():
    rng = np.random.default_rng(11)
    for _ in range(50):
        H = random_linear_hypergraph(rng, int(rng.integers(3, 8)), int(rng.integers(2, 4)))
        G = random_linear_hypergraph(rng, int(rng.integers(3, 8)), int(rng.integers(2, 4)))
        assert H.is_linear() and G.is_linear()
        P = cartesian_product(H, G)
        assert P.n == H.n * G.n
        assert P.m == H.n * G.m + H.m * G.n
        assert P.is_linear()


def test_lattice_products_stay_regular():
    line, _ = lattice_hypergraph(4, 1)
    plane, _ = lattice_hypergraph(4, 2)
    cube = cartesian_product(plane, line)
    assert cube == lattice_hypergraph(4, 3)[0]
    assert cube.is_regular(3)


@pytest.mark.parametrize("spec", [[2], [1, 1], [2, 1], [2, 2]])
def test_clique_hypergraph_of_free_graphs_is_berge_free(spec):
    rng = np.random.default_rng(5)
    F = star_forest(spec)
    checked = 0
    for _ in range(5000):
        n = int(rng.integers(5, 9))
        pairs = list(itertools.combinations(range(n), 2))
        mask = rng.random(len(pairs)) < rng.uniform(0.02, 0.5)
        G = Graph(n, [p for p, keep in zip(pairs, mask) if keep])
        if contains(G, F, Mode.SUB) is not None:
            continue
        H = clique_hypergraph(G, 3)
        assert H.m == count_cliques(G, 3)
        assert contains(H, F, Mode.BERGE) is None
        checked += 1
        if checked == 100:
            break
    assert checked == 100
