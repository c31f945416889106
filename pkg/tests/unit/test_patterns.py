import itertools
from fractions import Fraction

import numpy as np
import pytest

from starturan.hypergraph import (
    complete_uniform,
    lattice_hypergraph,
    random_uniform_hypergraph,
)
from starturan.patterns import (
    ExpansionWitness,
    adl_bound,
    berge_star_at,
    contains,
    contains_berge,
    contains_expansion,
    contains_sub,
    expand,
    find_berge,
    greedy_embed_star_forest,
    matching,
    skeleton_of,
    star,
    star_forest,
    verify_adl,
)
from starturan.types import Graph, Hypergraph, Mode
from starturan.utils import binom


def naive_berge(H: Hypergraph, F: Graph, anchor: int = None) -> bool:
    for image in itertools.permutations(range(H.n), F.n):
        options = [
            [j for j, e in enumerate(H.edges) if image[u] in e and image[v] in e]
            for u, v in F.edges
        ]
        for choice in itertools.product(*options):
            if len(set(choice)) != len(choice):
                continue
            if anchor is None or anchor in choice:
                return True
    return False


def naive_sub(H: Hypergraph, P: Hypergraph) -> bool:
    edges = set(H.edges)
    for image in itertools.permutations(range(H.n), P.n):
        if all(tuple(sorted(image[v] for v in e)) in edges for e in P.edges):
            return True
    return False


PATTERNS = [
    ("S1", star(1)),
    ("S2", star(2)),
    ("M2", matching(2)),
    ("S2+S1", star_forest([2, 1])),
]


def small_hosts(n: int, r: int, max_edges: int):
    triples = list(itertools.combinations(range(n), r))
    for m in range(max_edges + 1):
        for edges in itertools.combinations(triples, m):
            yield Hypergraph(n, edges)


def test_star_and_forest_shapes():
    assert star(3).edges == ((0, 1), (0, 2), (0, 3))
    F = star_forest([2, 1])
    assert F.n == 5
    assert F.edges == ((0, 1), (0, 2), (3, 4))
    assert matching(2) == Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        star(0)


def test_expand():
    P = expand(star(2), 3)
    assert P.n == 5
    assert P.edges == ((0, 1, 3), (0, 2, 4))
    assert expand(star(2), 2) == star(2)
    with pytest.raises(ValueError):
        expand(star(2), 1)


@pytest.mark.parametrize("name, F", PATTERNS)
def test_berge_decider_matches_brute_force(name, F):
    for H in small_hosts(5, 3, 4):
        witness = contains_berge(H, F)
        assert (witness is not None) == naive_berge(H, F), (name, H.edges)
        if witness is not None:
            assert witness.is_valid(H, F)


@pytest.mark.parametrize("name, F", PATTERNS)
def test_expansion_decider_matches_brute_force(name, F):
    P = expand(F, 3)
    for H in small_hosts(5, 3, 4):
        witness = contains_expansion(H, F, 3)
        assert (witness is not None) == naive_sub(H, P), (name, H.edges)
        if witness is not None:
            assert witness.is_valid(H, F, 3)


@pytest.mark.parametrize("name, F", PATTERNS)
def test_sub_decider_matches_brute_force(name, F):
    P = expand(F, 3)
    for H in small_hosts(6, 3, 2):
        witness = contains_sub(H, P)
        assert (witness is not None) == naive_sub(H, P), (name, H.edges)
        if witness is not None:
            assert witness.is_valid(H, P)


def test_graph_sub_decider():
    C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert contains(C5, star(2), Mode.SUB) is not None
    assert contains(C5, star(3), Mode.SUB) is None
    assert contains(C5, matching(2), Mode.SUB) is not None
    assert contains(C5, matching(3), Mode.SUB) is None


def test_anchored_berge_search():
    F = star(2)
    for H in small_hosts(5, 3, 3):
        view = H.view()
        for h in range(H.m):
            found = find_berge(view, F, anchor=h)
            assert (found is not None) == naive_berge(H, F, anchor=h)


def test_berge_in_complete_hypergraph():
    H = complete_uniform(8, 3)
    F = star_forest([3, 2])
    witness = contains(H, F, Mode.BERGE)
    assert witness is not None
    assert witness.is_valid(H, F)
    assert contains(complete_uniform(6, 3), F, Mode.BERGE) is None


def test_contains_rejects_bad_inputs():
    H = complete_uniform(5, 3)
    with pytest.raises(TypeError):
        contains(H, expand(star(2), 3), Mode.BERGE)
    with pytest.raises(ValueError):
        contains_expansion(Hypergraph(4, [(0, 1), (1, 2, 3)]), star(1), 3)


def test_witness_validation_catches_tampering():
    H = complete_uniform(5, 3)
    F = star(2)
    witness = contains_berge(H, F)
    assert witness.is_valid(H, F)
    first = F.edges[0]
    witness.edge_map[F.edges[1]] = witness.edge_map[first]
    assert not witness.is_valid(H, F)


def test_berge_witness_hyperedge_lookup():
    H = Hypergraph(6, [(0, 1, 2), (0, 3, 4), (2, 4, 5)])
    F = star(2)
    witness = contains_berge(H, F)
    for u, v in F.edges:
        e = witness.hyperedge(H, (v, u))
        assert e == H.edges[witness.edge_map[(u, v)]]
        assert witness.vertex_map[u] in e and witness.vertex_map[v] in e


def test_skeleton_of():
    H = complete_uniform(6, 3)
    F = star_forest([2, 1])
    witness = contains_berge(H, F)
    skeleton = skeleton_of(witness, F, H)
    assert skeleton.n == 6
    assert skeleton.m == 3
    for u, v in skeleton.edges:
        assert any(u in e and v in e for e in H.edges)
    with pytest.raises(ValueError):
        skeleton_of(witness, star(3))


def test_berge_star_at():
    H = complete_uniform(4, 3)
    witness = berge_star_at(H, 0, 3)
    assert witness is not None
    assert witness.vertex_map[0] == 0
    assert witness.is_valid(H, star(3))
    assert berge_star_at(H, 0, 4) is None
    with pytest.raises(ValueError):
        berge_star_at(H, 4, 1)
    with pytest.raises(ValueError):
        berge_star_at(H, 0, 0)


def random_hosts(seed: int, count: int, max_edges: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        r = int(rng.integers(3, 5))
        n = int(rng.integers(r + 1, 9))
        m = int(rng.integers(1, min(binom(n, r), max_edges) + 1))
        yield random_uniform_hypergraph(n, r, m, rng)


def test_berge_star_at_on_random_hosts():
    for H in random_hosts(seed=7, count=150, max_edges=40):
        r = len(H.edges[0])
        for v in range(H.n):
            deg = H.degree(v)
            for ell in range(1, 7):
                if ell <= r:
                    guaranteed = deg >= ell
                else:
                    guaranteed = deg > binom(ell - 1, r - 1)
                witness = berge_star_at(H, v, ell)
                if guaranteed:
                    assert witness is not None, (H.edges, v, ell)
                if witness is not None:
                    assert witness.vertex_map[0] == v
                    assert witness.is_valid(H, star(ell))


@pytest.mark.parametrize("name, F", PATTERNS)
def test_expansion_copy_is_a_berge_copy(name, F):
    for H in random_hosts(seed=19, count=60, max_edges=12):
        r = len(H.edges[0])
        if contains_expansion(H, F, r) is not None:
            witness = contains_berge(H, F)
            assert witness is not None, (name, H.edges)
            assert witness.is_valid(H, F)


def test_berge_copy_without_expansion_copy():
    H = complete_uniform(4, 3)
    assert contains_berge(H, star(2)) is not None
    assert contains_expansion(H, star(2), 3) is None


def test_adl_bound():
    assert adl_bound(3, 2, Fraction(1, 2), 10) == Fraction(15, 2)
    assert adl_bound(2, 2, 0, 9) == 0
    with pytest.raises(ValueError):
        adl_bound(1, 2, 0, 10)
    with pytest.raises(ValueError):
        adl_bound(3, 2, 1, 10)
    with pytest.raises(ValueError):
        adl_bound(3, -1, 0, 10)


def test_verify_adl_on_lattice():
    H, _ = lattice_hypergraph(3, 3)
    assert verify_adl(H, 3, 0, 3)
    assert verify_adl(H, 3, Fraction(1, 3), 4)
    # hypotheses fail, nothing to check
    assert verify_adl(H, 5, 0, 5)


@pytest.mark.parametrize("mode", [Mode.BERGE, Mode.EXPANSION])
def test_greedy_embed_star_forest(mode):
    H = complete_uniform(9, 3)
    witnesses = greedy_embed_star_forest(H, [2, 1], mode)
    assert witnesses is not None
    assert len(witnesses) == 2
    used_vertices, used_edges = set(), set()
    for witness, d in zip(witnesses, [2, 1]):
        if mode == Mode.EXPANSION:
            assert isinstance(witness, ExpansionWitness)
            assert witness.is_valid(H, star(d), 3)
        else:
            assert witness.is_valid(H, star(d))
        image = witness.image()
        assert not image & used_vertices
        used_vertices |= image
        edges = set(witness.edge_map.values())
        assert not edges & used_edges
        used_edges |= edges


def test_greedy_embed_failure_and_sub_mode():
    H = Hypergraph(6, [(0, 1, 2), (3, 4, 5)])
    assert greedy_embed_star_forest(H, [2], Mode.BERGE) is None
    with pytest.raises(ValueError):
        greedy_embed_star_forest(H, [1], Mode.SUB)
