"""
Structural operations on hypergraphs: construction, degrees, products,
lattice and complete hypergraphs, clique hypergraphs and the plain-text
file format.
"""

import itertools
from functools import reduce
from typing import Iterable, List, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from starturan.types import Edge, EdgeColoring, Graph, Hypergraph

#: Largest vertex count a lattice hypergraph may have.
MAX_LATTICE_VERTICES = 2_000_000


def make_hypergraph(n: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """
    Builds a hypergraph on ``n`` vertices, sorting every edge and removing
    duplicate edges.

    Raises
    ------
    ValueError
        If a vertex is out of range, an edge repeats a vertex, or an edge
        has fewer than two vertices.
    """
    return Hypergraph(n, edges)


def degree(H: Hypergraph, v: int) -> int:
    return H.degree(v)


def is_linear(H: Hypergraph) -> bool:
    return H.is_linear()


def is_regular(H: Hypergraph, d: int) -> bool:
    return H.is_regular(d)


def disjoint_union(H1: Hypergraph, H2: Hypergraph) -> Hypergraph:
    """
    Vertex-disjoint union. The vertices of ``H2`` are shifted by ``H1.n``.
    The result is a ``Graph`` when both operands are graphs.
    """
    shift = H1.n
    edges = list(H1.edges) + [tuple(v + shift for v in e) for e in H2.edges]
    if isinstance(H1, Graph) and isinstance(H2, Graph):
        return Graph(H1.n + H2.n, edges)
    return Hypergraph(H1.n + H2.n, edges)


def disjoint_union_all(hypergraphs: Sequence[Hypergraph]) -> Hypergraph:
    if len(hypergraphs) == 0:
        return Hypergraph(0)
    return reduce(disjoint_union, hypergraphs)


def cartesian_product(H: Hypergraph, G: Hypergraph) -> Hypergraph:
    """
    Cartesian product of two hypergraphs.

    The vertex ``(u, v)`` is encoded as ``u * G.n + v``. The edges are the
    sets ``{u} x e`` for every vertex ``u`` of ``H`` and edge ``e`` of ``G``,
    together with ``f x {v}`` for every edge ``f`` of ``H`` and vertex ``v``
    of ``G``. Operands of any uniformity are accepted, so the result may
    mix edge sizes.
    """
    nG = G.n
    edges: List[Edge] = []
    for u in range(H.n):
        for e in G.edges:
            edges.append(tuple(u * nG + v for v in e))
    for f in H.edges:
        for v in range(nG):
            edges.append(tuple(u * nG + v for u in f))
    return Hypergraph(H.n * nG, edges)


def grid_lines(
    shape: Sequence[int], include_trivial: bool = False
) -> List[Tuple[Edge, int]]:
    """
    Lines of the grid ``[shape[0]] x ... x [shape[-1]]``.

    A line fixes all coordinates but one. Vertices are numbered in
    row-major order, so the tuple ``(x_0, ..., x_{d-1})`` of the grid
    ``[r]^d`` is the base ``r`` number with digits ``x_0 ... x_{d-1}``.

    Parameters
    ----------
    shape : Sequence[int]
        Side length of every coordinate.
    include_trivial : bool, optional
        Also return the single-vertex lines of coordinates of side 1,
        by default False.

    Returns
    -------
    List[Tuple[Edge, int]]
        Every line with the coordinate that varies along it.
    """
    shape = tuple(int(s) for s in shape)
    if any(s < 1 for s in shape):
        raise ValueError("grid sides must be positive")
    total = int(np.prod(shape, dtype=object)) if shape else 1
    if total > MAX_LATTICE_VERTICES:
        raise ValueError(f"grid with {total} vertices is too large")
    index = np.arange(total, dtype=np.int64).reshape(shape)
    lines = []
    for j, side in enumerate(shape):
        if side < 2 and not include_trivial:
            continue
        rows = np.moveaxis(index, j, -1).reshape(-1, side)
        lines.extend((tuple(int(v) for v in row), j) for row in rows)
    return lines


def lattice_hypergraph(r: int, d: int) -> Tuple[Hypergraph, EdgeColoring]:
    """
    The lattice hypergraph ``[r]^d`` with its canonical coloring.

    The vertices are the ``r^d`` tuples over ``{0, ..., r-1}``. The tuples
    that agree on all coordinates but one form an edge, and that edge is
    colored by the index of the free coordinate. The result is linear and
    d-regular, with ``d * r^(d-1)`` edges. Every color class is a perfect
    matching.

    Raises
    ------
    ValueError
        If ``r < 2``, ``d < 1`` or ``r^d`` exceeds ``MAX_LATTICE_VERTICES``.
    """
    if r < 2:
        raise ValueError("lattice side r must be at least 2")
    if d < 1:
        raise ValueError("lattice dimension d must be at least 1")
    if r**d > MAX_LATTICE_VERTICES:
        raise ValueError(f"lattice [{r}]^{d} is too large")
    lines = grid_lines((r,) * d)
    H = Hypergraph(r**d, [e for e, _ in lines])
    return H, EdgeColoring(H, {e: j for e, j in lines})


def complete_uniform(n: int, r: int) -> Hypergraph:
    """All ``r``-subsets of ``n`` vertices. Empty when ``r > n``."""
    if r < 2:
        raise ValueError("edges need at least 2 vertices")
    return Hypergraph(n, itertools.combinations(range(n), r))


def clique_hypergraph(G: Graph, r: int) -> Hypergraph:
    """
    The ``r``-uniform hypergraph whose edges are the vertex sets of the
    ``K_r`` copies in ``G``.
    """
    if r < 2:
        raise ValueError("clique size r must be at least 2")
    edges = []
    for clique in nx.enumerate_all_cliques(G.to_networkx()):
        if len(clique) > r:
            break
        if len(clique) == r:
            edges.append(clique)
    return Hypergraph(G.n, edges)


def count_cliques(G: Graph, r: int) -> int:
    """Number of ``K_r`` copies in ``G``."""
    return clique_hypergraph(G, r).m


def random_uniform_hypergraph(
    n: int, r: int, m: int, rng: Union[int, np.random.Generator] = None
) -> Hypergraph:
    """
    A uniformly random ``r``-uniform hypergraph with ``m`` distinct edges.
    """
    rng = np.random.default_rng(rng)
    candidates = list(itertools.combinations(range(n), r))
    if m > len(candidates):
        raise ValueError(f"only {len(candidates)} {r}-sets on {n} vertices")
    chosen = rng.choice(len(candidates), size=m, replace=False)
    return Hypergraph(n, [candidates[j] for j in chosen])


def to_text(H: Hypergraph) -> str:
    """
    Serializes ``H`` in the plain-text format::

        h <n> <m>
        e v1 v2 ... vk

    with one ``e`` line per edge in lexicographic order.
    """
    lines = [f"h {H.n} {H.m}"]
    lines.extend("e " + " ".join(str(v) for v in e) for e in H.edges)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Hypergraph:
    """
    Parses the plain-text format written by ``to_text``. Blank lines and
    ``#`` comments are ignored.

    Raises
    ------
    ValueError
        On a missing or malformed header, malformed edge lines, an edge
        count that does not match the header, or invalid edges.
    """
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if tokens[0] != "h" or len(tokens) != 3:
                raise ValueError(f"line {lineno}: expected 'h <n> <m>' header")
            try:
                header = (int(tokens[1]), int(tokens[2]))
            except ValueError:
                raise ValueError(f"line {lineno}: bad header {line!r}") from None
            continue
        if tokens[0] != "e":
            raise ValueError(f"line {lineno}: expected an 'e' line")
        try:
            edges.append([int(tok) for tok in tokens[1:]])
        except ValueError:
            raise ValueError(f"line {lineno}: bad vertex in {line!r}") from None
    if header is None:
        raise ValueError("missing 'h <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise ValueError(f"header announces {m} edges, found {len(edges)}")
    H = Hypergraph(n, edges)
    if H.m != m:
        raise ValueError("file contains duplicate edges")
    return H


def save_hypergraph(H: Hypergraph, path: str):
    with open(path, "w") as f:
        f.write(to_text(H))


def load_hypergraph(path: str) -> Hypergraph:
    with open(path, "r") as f:
        return from_text(f.read())
