"""
This module contains the core primitive types used throughout starturan.
"""

from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy import sparse

Edge = Tuple[int, ...]


class Mode(str, Enum):
    """The three containment notions a forbidden pattern can be checked with."""

    SUB = "sub"
    BERGE = "berge"
    EXPANSION = "expansion"


def _canonical_edges(n: int, edges: Iterable[Sequence[int]]) -> Tuple[Edge, ...]:
    canonical = set()
    for edge in edges:
        vertices = [int(v) for v in edge]
        if len(vertices) < 2:
            raise ValueError(f"edge {list(edge)} has fewer than 2 vertices")
        for v in vertices:
            if v < 0 or v >= n:
                raise ValueError(f"vertex {v} out of range [0, {n})")
        if len(set(vertices)) != len(vertices):
            raise ValueError(f"edge {list(edge)} repeats a vertex")
        canonical.add(tuple(sorted(vertices)))
    return tuple(sorted(canonical))


class Hypergraph:
    """
    A simple hypergraph on the vertices ``0, ..., n - 1``.

    Edges are stored canonically: every edge is a strictly increasing tuple
    of vertices and the edge tuple is sorted lexicographically without
    duplicates. Edges of different sizes may be mixed, so uniformity is a
    predicate (``is_uniform``) rather than part of the type. Instances are
    treated as immutable values and may be shared freely.
    """

    __slots__ = ["_n", "_edges", "_degrees", "_index"]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self._n = int(n)  #:int: Number of vertices
        self._edges = _canonical_edges(self._n, edges)  #:Tuple[Edge]: Edges
        self._degrees: Optional[np.ndarray] = None
        self._index: Optional[Dict[Edge, int]] = None

    @property
    def n(self) -> int:
        """Number of vertices."""
        return self._n

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges in canonical (lexicographic) order."""
        return self._edges

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self._edges)

    def __len__(self) -> int:
        return len(self._edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._edges)

    def __contains__(self, edge: Sequence[int]) -> bool:
        return tuple(sorted(int(v) for v in edge)) in self._edge_lookup()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n={self._n}, m={self.m})"

    def _edge_lookup(self) -> Dict[Edge, int]:
        if self._index is None:
            self._index = {e: j for j, e in enumerate(self._edges)}
        return self._index

    def edge_index(self, edge: Sequence[int]) -> int:
        """Position of ``edge`` in the canonical edge order."""
        key = tuple(sorted(int(v) for v in edge))
        try:
            return self._edge_lookup()[key]
        except KeyError:
            raise ValueError(f"{list(edge)} is not an edge") from None

    def _check_vertex(self, v: int):
        if v < 0 or v >= self._n:
            raise ValueError(f"vertex {v} out of range [0, {self._n})")

    def degrees(self) -> np.ndarray:
        """
        Degree of every vertex.

        Returns
        -------
        np.ndarray with shape (n,)
            ``degrees()[v]`` is the number of edges containing ``v``.
        """
        if self._degrees is None:
            if self._edges:
                flat = np.fromiter(
                    (v for e in self._edges for v in e), dtype=np.int64
                )
            else:
                flat = np.zeros(0, dtype=np.int64)
            self._degrees = np.bincount(flat, minlength=self._n)
            self._degrees.setflags(write=False)
        return self._degrees

    def degree(self, v: int) -> int:
        """Number of edges containing vertex ``v``."""
        self._check_vertex(v)
        return int(self.degrees()[v])

    def max_degree(self) -> int:
        if self._n == 0:
            return 0
        return int(self.degrees().max())

    def average_degree(self) -> Fraction:
        """Exact average degree, ``sum(|e|) / n``."""
        if self._n == 0:
            return Fraction(0)
        return Fraction(sum(len(e) for e in self._edges), self._n)

    def is_uniform(self, r: int) -> bool:
        return all(len(e) == r for e in self._edges)

    def uniformity(self) -> Optional[int]:
        """The common edge size, or ``None`` when the hypergraph is empty
        or mixed."""
        sizes = {len(e) for e in self._edges}
        if len(sizes) == 1:
            return sizes.pop()
        return None

    def is_regular(self, d: int) -> bool:
        return bool(np.all(self.degrees() == d))

    def incidence_matrix(self) -> sparse.csr_matrix:
        """
        Sparse edge-vertex incidence matrix with shape (m, n).
        """
        rows = [j for j, e in enumerate(self._edges) for _ in e]
        cols = [v for e in self._edges for v in e]
        data = np.ones(len(cols), dtype=np.int64)
        return sparse.csr_matrix((data, (rows, cols)), shape=(self.m, self._n))

    def is_linear(self) -> bool:
        """True iff any two distinct edges share at most one vertex."""
        if self.m < 2:
            return True
        M = self.incidence_matrix()
        overlap = (M @ M.T).tocoo()
        off_diagonal = overlap.row != overlap.col
        return not bool(np.any(overlap.data[off_diagonal] > 1))

    def incidence_graph(self) -> nx.Graph:
        """
        Bipartite vertex-edge incidence graph. Vertex nodes are ``("v", i)``
        and edge nodes ``("e", j)``; every node carries a ``kind`` attribute.
        """
        G = nx.Graph()
        G.add_nodes_from((("v", v) for v in range(self._n)), kind="v")
        G.add_nodes_from((("e", j) for j in range(self.m)), kind="e")
        G.add_edges_from(
            (("e", j), ("v", v)) for j, e in enumerate(self._edges) for v in e
        )
        return G

    def view(self) -> "IncidenceView":
        """Mutable incidence structure with the same edge indices."""
        return IncidenceView(self._n, self._edges)


class Graph(Hypergraph):
    """
    A Hypergraph whose edges all have exactly two vertices.
    """

    __slots__ = []

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        super().__init__(n, edges)
        for e in self._edges:
            if len(e) != 2:
                raise ValueError(f"graph edge {list(e)} does not have 2 vertices")

    @staticmethod
    def from_hypergraph(H: Hypergraph) -> "Graph":
        return Graph(H.n, H.edges)

    def neighbors(self, v: int) -> List[int]:
        self._check_vertex(v)
        out = []
        for a, b in self._edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self._n))
        G.add_edges_from(self._edges)
        return G


class EdgeColoring:
    """
    Assignment of a color index to every edge of a hypergraph.
    """

    __slots__ = ["hypergraph", "colors"]

    def __init__(self, hypergraph: Hypergraph, colors: Dict[Edge, int]):
        self.hypergraph = hypergraph  #:Hypergraph: the colored hypergraph
        #:Dict[Edge, int]: color of every edge
        self.colors = {tuple(sorted(e)): int(c) for e, c in colors.items()}

    def __getitem__(self, edge: Sequence[int]) -> int:
        return self.colors[tuple(sorted(edge))]

    @property
    def num_colors(self) -> int:
        return len(set(self.colors.values()))

    def color_classes(self) -> Dict[int, List[Edge]]:
        classes: Dict[int, List[Edge]] = {}
        for e in self.hypergraph.edges:
            if e in self.colors:
                classes.setdefault(self.colors[e], []).append(e)
        return dict(sorted(classes.items()))

    def is_proper(self) -> bool:
        """Every edge is colored and no two edges sharing a vertex share a
        color."""
        if any(e not in self.colors for e in self.hypergraph.edges):
            return False
        for members in self.color_classes().values():
            seen = set()
            for e in members:
                if seen.intersection(e):
                    return False
                seen.update(e)
        return True

    def __repr__(self) -> str:
        return (
            f"EdgeColoring({self.hypergraph!r}, num_colors={self.num_colors})"
        )


class StarForestSpec:
    """
    Degree sequence ``d_1 >= d_2 >= ... >= d_k >= 1`` describing the star
    forest made of the stars ``S_{d_1}, ..., S_{d_k}``.
    """

    __slots__ = ["degrees"]

    def __init__(self, degrees: Sequence[int]):
        degrees = tuple(int(d) for d in degrees)
        if len(degrees) == 0:
            raise ValueError("a star forest needs at least one star")
        if any(d < 1 for d in degrees):
            raise ValueError("star degrees must be positive")
        if any(a < b for a, b in zip(degrees, degrees[1:])):
            raise ValueError(
                f"star degrees must be non-increasing, got {list(degrees)}"
            )
        self.degrees = degrees  #:Tuple[int]: d_1, ..., d_k

    @staticmethod
    def from_string(text: str) -> "StarForestSpec":
        """Parses a comma separated list such as ``"3,2,2"``. Unsorted input
        is rejected, never reordered."""
        try:
            degrees = [int(tok) for tok in text.split(",") if tok.strip()]
        except ValueError:
            raise ValueError(f"cannot parse degree list {text!r}") from None
        return StarForestSpec(degrees)

    @property
    def k(self) -> int:
        return len(self.degrees)

    def d(self, i: int) -> int:
        """The 1-based degree ``d_i``."""
        if i < 1 or i > self.k:
            raise ValueError(f"index {i} outside 1..{self.k}")
        return self.degrees[i - 1]

    def num_vertices(self) -> int:
        return sum(d + 1 for d in self.degrees)

    def num_edges(self) -> int:
        return sum(self.degrees)

    def is_matching(self) -> bool:
        return all(d == 1 for d in self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StarForestSpec):
            return NotImplemented
        return self.degrees == other.degrees

    def __hash__(self) -> int:
        return hash(self.degrees)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.degrees)

    def __repr__(self) -> str:
        return f"StarForestSpec({list(self.degrees)})"


class IncidenceView:
    """
    Mutable incidence structure used by the deciders and the exact search.

    Edges are appended and popped in stack order so that search code can
    extend a host hypergraph and roll it back cheaply. Edge ids are
    positions in ``edges``.
    """

    __slots__ = ["n", "edges", "edge_sets", "incident"]

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        self.n = n
        self.edges: List[Edge] = []
        self.edge_sets: List[frozenset] = []
        #:List[List[int]]: ids of the edges containing each vertex
        self.incident: List[List[int]] = [[] for _ in range(n)]
        for e in edges:
            self.add_edge(e)

    def add_edge(self, edge: Edge) -> int:
        idx = len(self.edges)
        self.edges.append(edge)
        self.edge_sets.append(frozenset(edge))
        for v in edge:
            self.incident[v].append(idx)
        return idx

    def pop_edge(self) -> Edge:
        edge = self.edges.pop()
        self.edge_sets.pop()
        for v in edge:
            self.incident[v].pop()
        return edge

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def pair_edges(self, u: int, v: int) -> List[int]:
        """Ids of the edges containing both ``u`` and ``v``."""
        if len(self.incident[u]) > len(self.incident[v]):
            u, v = v, u
        return [j for j in self.incident[u] if v in self.edge_sets[j]]

    def shadow_neighbors(self, v: int) -> List[int]:
        """Vertices sharing at least one edge with ``v``."""
        out = set()
        for j in self.incident[v]:
            out.update(self.edges[j])
        out.discard(v)
        return sorted(out)

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, self.edges)


class StarTuranOracle(ABC):
    """
    Supplier of the star Turán value ``ex_r(m, S^+_ell)``, the largest number
    of edges in an ``m``-vertex ``r``-uniform hypergraph without an expanded
    star with ``ell`` leaves. Implementations must be non-negative and
    non-decreasing in ``m``.
    """

    @abstractmethod
    def evaluate(self, m: int, ell: int, r: int) -> int:
        """
        Parameters
        ----------
        m : int
            Number of host vertices, may be zero.
        ell : int
            Number of leaves of the forbidden star.
        r : int
            Uniformity.
        """
        pass

    def __call__(self, m: int, ell: int, r: int) -> int:
        return self.evaluate(m, ell, r)
