"""
Forbidden patterns and containment deciders.

Three notions of containment are supported for a host hypergraph ``H``:

    - subhypergraph: an injective vertex map sending every pattern edge
      exactly onto an edge of ``H``;
    - expansion: ``H`` contains ``F^+``, the graph ``F`` with every edge
      padded by ``r - 2`` fresh vertices;
    - Berge: an injective vertex map plus distinct hyperedges, one per edge
      ``uv`` of ``F``, each containing the images of ``u`` and ``v``.

All deciders are complete backtracking searches that return a certificate
(a witness) or ``None``. They share the same pruning: pattern vertices are
placed in connectivity order, host candidates are filtered by degree, and
interchangeable pattern vertices (twins and identical star components) are
only tried with increasing images.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx
import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import maximum_bipartite_matching

from starturan.hypergraph import disjoint_union_all
from starturan.types import (
    Edge,
    Graph,
    Hypergraph,
    IncidenceView,
    Mode,
    StarForestSpec,
)


def star(ell: int) -> Graph:
    """The star ``S_ell = K_{1, ell}`` with center 0 and leaves 1..ell."""
    if ell < 1:
        raise ValueError("a star needs at least one leaf")
    return Graph(ell + 1, [(0, i) for i in range(1, ell + 1)])


def star_forest(spec: Union[StarForestSpec, Sequence[int]]) -> Graph:
    """Vertex-disjoint union of the stars ``S_{d_1}, ..., S_{d_k}``."""
    if not isinstance(spec, StarForestSpec):
        spec = StarForestSpec(spec)
    return disjoint_union_all([star(d) for d in spec])


def matching(k: int) -> Graph:
    """The matching ``M_k``, i.e. ``k`` disjoint edges."""
    return star_forest([1] * k)


def expand(F: Graph, r: int) -> Hypergraph:
    """
    The expansion ``F^+``: every edge of ``F`` gets ``r - 2`` new vertices,
    all distinct. The new vertices are numbered from ``F.n`` upwards in
    edge order. For ``r = 2`` the graph itself is returned.
    """
    if r < 2:
        raise ValueError("uniformity r must be at least 2")
    if r == 2:
        return F
    edges = []
    fresh = F.n
    for u, v in F.edges:
        edges.append((u, v) + tuple(range(fresh, fresh + r - 2)))
        fresh += r - 2
    return Hypergraph(fresh, edges)


class BergeWitness:
    """
    Certificate that a host contains a Berge copy of a graph ``F``.
    """

    __slots__ = ["vertex_map", "edge_map"]

    def __init__(self, vertex_map: Dict[int, int], edge_map: Dict[Edge, int]):
        #:Dict[int, int]: injection from pattern vertices to host vertices
        self.vertex_map = dict(vertex_map)
        #:Dict[Edge, int]: pattern edge to the index of its host hyperedge
        self.edge_map = dict(edge_map)

    def hyperedge(self, H: Hypergraph, edge: Sequence[int]) -> Edge:
        return H.edges[self.edge_map[tuple(sorted(edge))]]

    def image(self) -> Set[int]:
        return set(self.vertex_map.values())

    def _is_valid_map(self, H: Hypergraph, F: Hypergraph) -> bool:
        if set(self.vertex_map) != set(range(F.n)):
            return False
        images = list(self.vertex_map.values())
        if len(set(images)) != len(images):
            return False
        if any(x < 0 or x >= H.n for x in images):
            return False
        if set(self.edge_map) != set(F.edges):
            return False
        targets = list(self.edge_map.values())
        if len(set(targets)) != len(targets):
            return False
        return all(0 <= h < H.m for h in targets)

    def is_valid(self, H: Hypergraph, F: Graph) -> bool:
        """Re-checks every witness invariant against ``H`` and ``F``."""
        if not self._is_valid_map(H, F):
            return False
        for u, v in F.edges:
            hyperedge = self.hyperedge(H, (u, v))
            if self.vertex_map[u] not in hyperedge:
                return False
            if self.vertex_map[v] not in hyperedge:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "vertex_map": sorted([u, x] for u, x in self.vertex_map.items()),
            "edge_map": sorted([list(e), h] for e, h in self.edge_map.items()),
        }

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(vertex_map={self.vertex_map}, "
            f"edge_map={self.edge_map})"
        )


class ExpansionWitness(BergeWitness):
    """
    Certificate that an ``r``-uniform host contains ``F^+``. On top of the
    Berge data it records, for every pattern edge, the ``r - 2`` host
    vertices padding it.
    """

    __slots__ = ["expansion_fill"]

    def __init__(
        self,
        vertex_map: Dict[int, int],
        edge_map: Dict[Edge, int],
        expansion_fill: Dict[Edge, Tuple[int, ...]],
    ):
        super().__init__(vertex_map, edge_map)
        #:Dict[Edge, Tuple[int]]: padding vertices of every pattern edge
        self.expansion_fill = dict(expansion_fill)

    def is_valid(self, H: Hypergraph, F: Graph, r: int = None) -> bool:
        if not super().is_valid(H, F):
            return False
        if set(self.expansion_fill) != set(F.edges):
            return False
        used = set(self.image())
        for u, v in F.edges:
            hyperedge = H.edges[self.edge_map[(u, v)]]
            if r is not None and len(hyperedge) != r:
                return False
            ends = {self.vertex_map[u], self.vertex_map[v]}
            fill = tuple(sorted(set(hyperedge) - ends))
            if fill != tuple(self.expansion_fill[(u, v)]):
                return False
            if used.intersection(fill):
                return False
            used.update(fill)
        return True

    def to_dict(self) -> dict:
        out = super().to_dict()
        out["expansion_fill"] = sorted(
            [list(e), list(fill)] for e, fill in self.expansion_fill.items()
        )
        return out


class SubWitness:
    """
    Certificate that a hypergraph ``P`` is a subhypergraph of a host: an
    injective vertex map sending each edge of ``P`` exactly onto the host
    edge recorded in ``edge_map``.
    """

    __slots__ = ["vertex_map", "edge_map"]

    def __init__(self, vertex_map: Dict[int, int], edge_map: Dict[Edge, int]):
        self.vertex_map = dict(vertex_map)
        self.edge_map = dict(edge_map)

    def is_valid(self, H: Hypergraph, P: Hypergraph) -> bool:
        if set(self.vertex_map) != set(range(P.n)):
            return False
        images = list(self.vertex_map.values())
        if len(set(images)) != len(images):
            return False
        if any(x < 0 or x >= H.n for x in images):
            return False
        if set(self.edge_map) != set(P.edges):
            return False
        for e, h in self.edge_map.items():
            if not 0 <= h < H.m:
                return False
            if tuple(sorted(self.vertex_map[v] for v in e)) != H.edges[h]:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "vertex_map": sorted([u, x] for u, x in self.vertex_map.items()),
            "edge_map": sorted([list(e), h] for e, h in self.edge_map.items()),
        }

    def __repr__(self) -> str:
        return f"SubWitness(vertex_map={self.vertex_map})"


Witness = Union[BergeWitness, ExpansionWitness, SubWitness]


class _PatternShape:
    """
    Precomputed structure of a pattern hypergraph: incidences, degrees and
    the ordering constraints ``f(a) < f(b)`` that break its symmetries.
    """

    def __init__(self, P: Hypergraph):
        self.n = P.n
        self.edges: List[Edge] = list(P.edges)
        self.deg = [int(x) for x in P.degrees()]
        self.is_graph = all(len(e) == 2 for e in self.edges)
        #:List[List[int]]: pattern edges containing each vertex
        self.incident: List[List[int]] = [[] for _ in range(P.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                self.incident[v].append(j)
        self.nonisolated = [v for v in range(P.n) if self.deg[v] > 0]
        self.isolated = [v for v in range(P.n) if self.deg[v] == 0]

        pairs = self._twin_pairs(P)
        if self.is_graph:
            pairs += self._star_component_pairs(P)
        #:List[List[Tuple[int, bool]]]: (other, other must map lower)
        self.order_constraints: List[List[Tuple[int, bool]]] = [
            [] for _ in range(P.n)
        ]
        for a, b in pairs:
            self.order_constraints[a].append((b, False))
            self.order_constraints[b].append((a, True))

    def _twin_pairs(self, P: Hypergraph) -> List[Tuple[int, int]]:
        edge_set = set(self.edges)

        def swappable(u: int, w: int) -> bool:
            swap = {u: w, w: u}
            for j in self.incident[u] + self.incident[w]:
                image = tuple(sorted(swap.get(x, x) for x in self.edges[j]))
                if image not in edge_set:
                    return False
            return True

        classes: List[List[int]] = []
        for v in self.nonisolated:
            for members in classes:
                if self.deg[members[0]] == self.deg[v] and all(
                    swappable(w, v) for w in members
                ):
                    members.append(v)
                    break
            else:
                classes.append([v])
        return [(c[t], c[t + 1]) for c in classes for t in range(len(c) - 1)]

    def _star_component_pairs(self, P: Hypergraph) -> List[Tuple[int, int]]:
        G = nx.Graph()
        G.add_nodes_from(self.nonisolated)
        G.add_edges_from(self.edges)
        centers_by_size: Dict[int, List[int]] = {}
        for component in nx.connected_components(G):
            size = len(component) - 1
            center = max(sorted(component), key=lambda v: self.deg[v])
            if self.deg[center] != size:
                continue
            if G.subgraph(component).number_of_edges() != size:
                continue
            centers_by_size.setdefault(size, []).append(center)
        pairs = []
        for centers in centers_by_size.values():
            centers.sort()
            pairs.extend(zip(centers, centers[1:]))
        return pairs

    def neighbors(self, v: int) -> List[int]:
        out = []
        for j in self.incident[v]:
            out.extend(x for x in self.edges[j] if x != v)
        return out

    def order(self, first_edge: int = None) -> List[int]:
        """Placement order: seed edge first, then the vertex with the most
        placed neighbours, breaking ties by degree."""
        placed: List[int] = []
        inside = [False] * self.n
        seeds = list(self.edges[first_edge]) if first_edge is not None else []
        weight = [0] * self.n
        while len(placed) < len(self.nonisolated):
            if seeds:
                v = seeds.pop(0)
            else:
                v = min(
                    (u for u in self.nonisolated if not inside[u]),
                    key=lambda u: (-weight[u], -self.deg[u], u),
                )
            placed.append(v)
            inside[v] = True
            for u in self.neighbors(v):
                weight[u] += 1
        return placed


@lru_cache(maxsize=128)
def _shape_of(P: Hypergraph) -> _PatternShape:
    return _PatternShape(P)


def _degree_dominated(shape: _PatternShape, view: IncidenceView) -> bool:
    """True when the host degrees can dominate the pattern degrees under
    some injection."""
    need = sorted((d for d in shape.deg if d > 0), reverse=True)
    have = sorted((len(inc) for inc in view.incident), reverse=True)
    if len(need) > len(have):
        return False
    return all(a <= b for a, b in zip(need, have))


class _Embedder:
    """
    Shared backtracking over pattern vertices. Subclasses decide which host
    edges may carry each pattern edge and how a complete vertex map is
    turned into a witness.
    """

    def __init__(self, view: IncidenceView, shape: _PatternShape):
        self.view = view
        self.shape = shape
        self.f = [-1] * shape.n
        self.used: Set[int] = set()
        self.host_order = sorted(
            range(view.n), key=lambda x: (-view.degree(x), x)
        )
        self.forced: Optional[int] = None
        self.anchor: Optional[int] = None

    def run(self, anchor: int = None):
        shape, view = self.shape, self.view
        if len(shape.nonisolated) > view.n or len(shape.edges) > view.m:
            return None
        if not self._fits():
            return None
        if len(shape.edges) == 0:
            if anchor is not None:
                return None
            return self._complete({})
        if not _degree_dominated(shape, view):
            return None
        if anchor is None:
            return self._search(None, None)
        for j in range(len(shape.edges)):
            if self._anchor_allowed(j, anchor):
                result = self._search(j, anchor)
                if result is not None:
                    return result
        return None

    def _fits(self) -> bool:
        return self.shape.n <= self.view.n

    def _anchor_allowed(self, j: int, anchor: int) -> bool:
        return True

    def _search(self, forced: Optional[int], anchor: Optional[int]):
        self.forced, self.anchor = forced, anchor
        self.f = [-1] * self.shape.n
        self.used = set()
        order = self.shape.order(forced)
        return self._place(order, 0, {}, ({}, {}))

    def _vertex_candidates(self, v: int) -> List[int]:
        shape, view = self.shape, self.view
        if self.forced is not None and v in shape.edges[self.forced]:
            pool = sorted(
                view.edges[self.anchor], key=lambda x: (-view.degree(x), x)
            )
        else:
            placed = [u for u in shape.neighbors(v) if self.f[u] >= 0]
            if placed:
                pool = sorted(
                    view.shadow_neighbors(self.f[placed[0]]),
                    key=lambda x: (-view.degree(x), x),
                )
            else:
                pool = self.host_order
        need = shape.deg[v]
        return [x for x in pool if x not in self.used and view.degree(x) >= need]

    def _symmetry_ok(self, v: int, x: int) -> bool:
        for w, lower in self.shape.order_constraints[v]:
            y = self.f[w]
            if y < 0:
                continue
            if lower and not y < x:
                return False
            if not lower and not x < y:
                return False
        return True

    def _place(self, order: List[int], t: int, cands, state):
        if t == len(order):
            return self._finish(cands, state)
        v = order[t]
        for x in self._vertex_candidates(v):
            if not self._symmetry_ok(v, x):
                continue
            extended = self._extend(v, x, cands)
            if extended is None:
                continue
            new_cands, new_edges = extended
            new_state = self._update_state(state, new_cands, new_edges)
            if new_state is None:
                continue
            self.f[v] = x
            self.used.add(x)
            result = self._place(order, t + 1, new_cands, new_state)
            if result is not None:
                return result
            self.f[v] = -1
            self.used.discard(x)
        return None

    def _extend(self, v: int, x: int, cands):
        raise NotImplementedError

    def _update_state(self, state, cands, new_edges):
        return state

    def _finish(self, cands, state):
        raise NotImplementedError

    def _complete(self, edge_map: Dict[int, int], extra_used: Set[int] = ()):
        f = list(self.f)
        taken = set(self.used) | set(extra_used)
        free = (x for x in range(self.view.n) if x not in taken)
        for v in self.shape.isolated:
            x = next(free, None)
            if x is None:
                return None
            f[v] = x
        return f, dict(edge_map)


class _GraphEmbedder(_Embedder):
    """
    Berge and expansion containment of a graph pattern. In expansion mode
    every carrier hyperedge has exactly ``r`` vertices and meets the image
    of the vertex map only in its two ends.
    """

    def __init__(
        self,
        view: IncidenceView,
        shape: _PatternShape,
        expansion: bool,
        r: int = None,
    ):
        super().__init__(view, shape)
        self.expansion = expansion
        self.r = r

    def _fits(self) -> bool:
        if not self.expansion:
            return super()._fits()
        extra = (self.r - 2) * len(self.shape.edges)
        return self.shape.n + extra <= self.view.n

    def _anchor_allowed(self, j: int, anchor: int) -> bool:
        return not self.expansion or len(self.view.edges[anchor]) == self.r

    def _extend(self, v: int, x: int, cands):
        view, shape = self.view, self.shape
        new = dict(cands)
        if self.expansion:
            for j, hs in cands.items():
                kept = [h for h in hs if x not in view.edge_sets[h]]
                if not kept:
                    return None
                if len(kept) != len(hs):
                    new[j] = kept
        new_edges = []
        for j in shape.incident[v]:
            a, b = shape.edges[j]
            u = b if a == v else a
            y = self.f[u]
            if y < 0:
                continue
            hs = view.pair_edges(y, x)
            if self.expansion:
                hs = [
                    h
                    for h in hs
                    if len(view.edges[h]) == self.r
                    and len(view.edge_sets[h] & self.used) == 1
                ]
            if self.forced is not None:
                if j == self.forced:
                    hs = [self.anchor] if self.anchor in hs else []
                else:
                    hs = [h for h in hs if h != self.anchor]
            if not hs:
                return None
            new[j] = hs
            new_edges.append(j)
        return new, new_edges

    def _update_state(self, state, cands, new_edges):
        if self.expansion or not new_edges:
            return state
        match_f, match_h = dict(state[0]), dict(state[1])
        for j in new_edges:
            if not _augment(j, cands, match_f, match_h, set()):
                return None
        return match_f, match_h

    def _finish(self, cands, state):
        if not self.expansion:
            return self._complete(state[0])
        chosen = self._choose_fills(cands)
        if chosen is None:
            return None
        edge_map, fill_vertices = chosen
        return self._complete(edge_map, fill_vertices)

    def _choose_fills(self, cands):
        view, shape = self.view, self.shape
        order = sorted(cands, key=lambda j: (len(cands[j]), j))
        chosen: Dict[int, int] = {}
        taken = set(self.used)
        fills: Set[int] = set()

        def assign(t: int) -> bool:
            if t == len(order):
                return True
            j = order[t]
            ends = {self.f[u] for u in shape.edges[j]}
            for h in cands[j]:
                if h in chosen.values():
                    continue
                fill = view.edge_sets[h] - ends
                if fill & taken:
                    continue
                chosen[j] = h
                taken.update(fill)
                fills.update(fill)
                if assign(t + 1):
                    return True
                taken.difference_update(fill)
                fills.difference_update(fill)
                del chosen[j]
            return False

        if assign(0):
            return chosen, fills
        return None


class _SubEmbedder(_Embedder):
    """Exact subhypergraph containment of an arbitrary pattern."""

    def __init__(self, view: IncidenceView, shape: _PatternShape):
        super().__init__(view, shape)
        self.lookup = {s: j for j, s in enumerate(view.edge_sets)}

    def _anchor_allowed(self, j: int, anchor: int) -> bool:
        return len(self.shape.edges[j]) == len(self.view.edges[anchor])

    def _extend(self, v: int, x: int, cands):
        view, shape = self.view, self.shape
        new = dict(cands)
        new_edges = []
        for j in shape.incident[v]:
            e = shape.edges[j]
            images = {self.f[u] for u in e if u != v and self.f[u] >= 0}
            images.add(x)
            if len(images) == len(e):
                h = self.lookup.get(frozenset(images))
                if h is None:
                    return None
                if self.forced is not None and (j == self.forced) != (
                    h == self.anchor
                ):
                    return None
                new[j] = [h]
                new_edges.append(j)
            elif not any(
                len(view.edges[h]) == len(e) and images <= view.edge_sets[h]
                for h in view.incident[x]
            ):
                return None
        return new, new_edges

    def _finish(self, cands, state):
        return self._complete({j: hs[0] for j, hs in cands.items()})


def _augment(j: int, cands, match_f, match_h, seen: Set[int]) -> bool:
    for h in cands[j]:
        if h in seen:
            continue
        seen.add(h)
        if h not in match_h or _augment(match_h[h], cands, match_f, match_h, seen):
            match_h[h] = j
            match_f[j] = h
            return True
    return False


def find_berge(view: IncidenceView, F: Graph, anchor: int = None):
    """
    Searches ``view`` for a Berge copy of ``F``. When ``anchor`` is given,
    only copies using the hyperedge with that id are considered.

    Returns
    -------
    Optional[Tuple[List[int], Dict[int, int]]]
        Image of every pattern vertex, and the host edge id of every
        pattern edge index; ``None`` when no copy exists.
    """
    return _GraphEmbedder(view, _shape_of(F), expansion=False).run(anchor)


def find_expansion(view: IncidenceView, F: Graph, r: int, anchor: int = None):
    """As ``find_berge`` for copies of the expansion ``F^+``."""
    return _GraphEmbedder(view, _shape_of(F), expansion=True, r=r).run(anchor)


def find_sub(view: IncidenceView, P: Hypergraph, anchor: int = None):
    """As ``find_berge`` for exact copies of ``P``."""
    shape = _shape_of(P)
    if shape.is_graph:
        return _GraphEmbedder(view, shape, expansion=True, r=2).run(anchor)
    return _SubEmbedder(view, shape).run(anchor)


def contains_sub(H: Hypergraph, P: Hypergraph) -> Optional[SubWitness]:
    """
    Decides whether ``P`` is a subhypergraph of ``H``.

    Returns
    -------
    Optional[SubWitness]
        An embedding sending every edge of ``P`` onto an edge of ``H``,
        or ``None`` when there is none.
    """
    found = find_sub(H.view(), P)
    if found is None:
        return None
    f, edge_map = found
    return SubWitness(
        {v: f[v] for v in range(P.n)},
        {P.edges[j]: h for j, h in edge_map.items()},
    )


def contains_berge(H: Hypergraph, F: Graph) -> Optional[BergeWitness]:
    """
    Decides whether ``H`` contains a Berge copy of the graph ``F``.

    Vertex maps are enumerated with degree filtering. Distinct carrier
    hyperedges are maintained incrementally as a bipartite matching grown by
    augmenting paths, so a vertex map is rejected as soon as the pattern
    edges placed so far have no system of distinct representatives.
    """
    found = find_berge(H.view(), F)
    if found is None:
        return None
    f, edge_map = found
    return BergeWitness(
        {v: f[v] for v in range(F.n)},
        {F.edges[j]: h for j, h in edge_map.items()},
    )


def contains_expansion(
    H: Hypergraph, F: Graph, r: int
) -> Optional[ExpansionWitness]:
    """
    Decides whether the ``r``-uniform host ``H`` contains ``F^+`` without
    materialising the expansion.

    Raises
    ------
    ValueError
        If ``H`` is not ``r``-uniform.
    """
    if not H.is_uniform(r):
        raise ValueError(f"host is not {r}-uniform")
    found = find_expansion(H.view(), F, r)
    if found is None:
        return None
    f, edge_map = found
    fills = {}
    for j, h in edge_map.items():
        u, v = F.edges[j]
        fills[(u, v)] = tuple(sorted(set(H.edges[h]) - {f[u], f[v]}))
    return ExpansionWitness(
        {v: f[v] for v in range(F.n)},
        {F.edges[j]: h for j, h in edge_map.items()},
        fills,
    )


def contains(
    H: Hypergraph, pattern: Hypergraph, mode: Mode, r: int = None
) -> Optional[Witness]:
    """Dispatches to the decider of ``mode``."""
    mode = Mode(mode)
    if mode == Mode.SUB:
        return contains_sub(H, pattern)
    if not isinstance(pattern, Graph):
        raise TypeError(f"{mode.value} containment needs a graph pattern")
    if mode == Mode.BERGE:
        return contains_berge(H, pattern)
    if r is None:
        r = H.uniformity() or 2
    return contains_expansion(H, pattern, r)


def skeleton_of(w: BergeWitness, F: Graph, H: Hypergraph = None) -> Graph:
    """
    The copy of ``F`` spanned by the vertex map of a Berge witness.

    The skeleton keeps host labels. It lives on ``H.n`` vertices when ``H``
    is given, otherwise on ``max(image) + 1`` vertices.

    Raises
    ------
    ValueError
        If ``w`` does not fit ``F`` (or is not valid in ``H``).
    """
    if set(w.vertex_map) != set(range(F.n)) or set(w.edge_map) != set(F.edges):
        raise ValueError("witness does not match the pattern")
    if len(set(w.vertex_map.values())) != F.n:
        raise ValueError("witness vertex map is not injective")
    if H is not None and not w.is_valid(H, F):
        raise ValueError("witness is not valid in the host")
    if H is not None:
        n = H.n
    else:
        n = max(w.vertex_map.values(), default=-1) + 1
    return Graph(n, [(w.vertex_map[u], w.vertex_map[v]) for u, v in F.edges])


def _star_matching(
    view: IncidenceView,
    center: int,
    ell: int,
    banned_edges: Set[int] = frozenset(),
    banned_vertices: Set[int] = frozenset(),
) -> Optional[List[Tuple[int, int]]]:
    """Matches ``ell`` hyperedges at ``center`` to distinct leaves."""
    rows = [j for j in view.incident[center] if j not in banned_edges]
    if len(rows) < ell:
        return None
    leaves = sorted(
        {
            u
            for j in rows
            for u in view.edges[j]
            if u != center and u not in banned_vertices
        }
    )
    if len(leaves) < ell:
        return None
    column = {u: c for c, u in enumerate(leaves)}
    entries = [
        (i, column[u])
        for i, j in enumerate(rows)
        for u in view.edges[j]
        if u in column
    ]
    row_idx, col_idx = zip(*entries)
    incidence = sparse.csr_matrix(
        (np.ones(len(entries)), (row_idx, col_idx)),
        shape=(len(rows), len(leaves)),
    )
    matched = maximum_bipartite_matching(incidence, perm_type="column")
    pairs = [(rows[i], leaves[c]) for i, c in enumerate(matched) if c >= 0]
    if len(pairs) < ell:
        return None
    return pairs[:ell]


def _star_witness(center: int, pairs: List[Tuple[int, int]]) -> BergeWitness:
    vertex_map = {0: center}
    edge_map = {}
    for i, (h, leaf) in enumerate(pairs, start=1):
        vertex_map[i] = leaf
        edge_map[(0, i)] = h
    return BergeWitness(vertex_map, edge_map)


def berge_star_at(H: Hypergraph, v: int, ell: int) -> Optional[BergeWitness]:
    """
    A Berge copy of ``S_ell`` centred at ``v``, or ``None``.

    Found by maximum bipartite matching between the hyperedges at ``v`` and
    the candidate leaves. A copy always exists when ``ell <= r`` and
    ``deg(v) >= ell``, or when ``ell > r`` and ``deg(v) > C(ell-1, r-1)``.
    """
    if v < 0 or v >= H.n:
        raise ValueError(f"vertex {v} out of range [0, {H.n})")
    if ell < 1:
        raise ValueError("a star needs at least one leaf")
    pairs = _star_matching(H.view(), v, ell)
    if pairs is None:
        return None
    return _star_witness(v, pairs)


def adl_bound(Delta: int, d: int, eps: Union[Fraction, int], n: int) -> Fraction:
    """
    Bound of the average degree lemma.

    If a hypergraph on ``n`` vertices has average degree at least
    ``d - eps`` and maximum degree at most ``Delta``, then fewer than
    ``(Delta - d + eps) / (Delta - d + 1) * n`` of its vertices, and at
    most that many, have degree below ``d``.

    Parameters
    ----------
    Delta : int
        Maximum degree, at least ``d``.
    d : int
        Degree threshold, non-negative.
    eps : Fraction
        Slack in ``[0, 1)``, kept exact.
    n : int
        Number of vertices.

    Returns
    -------
    Fraction
        The exact bound.
    """
    eps = Fraction(eps)
    if d < 0:
        raise ValueError("degree threshold must be non-negative")
    if Delta < d:
        raise ValueError(f"maximum degree {Delta} is below threshold {d}")
    if eps < 0 or eps >= 1:
        raise ValueError("eps must lie in [0, 1)")
    return (Delta - d + eps) / (Delta - d + 1) * n


def verify_adl(H: Hypergraph, d: int, eps: Union[Fraction, int], Delta: int) -> bool:
    """
    Checks the average degree lemma on ``H``. Returns ``True`` when the
    hypotheses fail, since the lemma then claims nothing.
    """
    eps = Fraction(eps)
    if H.average_degree() < d - eps or H.max_degree() > Delta:
        return True
    low = int(np.count_nonzero(H.degrees() < d))
    return low <= adl_bound(Delta, d, eps, H.n)


def _greedy_expanded_star(
    view: IncidenceView, center: int, ell: int, used: Set[int]
) -> Optional[List[int]]:
    chosen = []
    covered = {center}
    for j in view.incident[center]:
        s = view.edge_sets[j]
        if s & used or (s - {center}) & covered:
            continue
        chosen.append(j)
        covered |= s
        if len(chosen) == ell:
            return chosen
    return None


def greedy_embed_star_forest(
    H: Hypergraph,
    spec: Union[StarForestSpec, Sequence[int]],
    mode: Mode = Mode.BERGE,
) -> Optional[List[Union[BergeWitness, ExpansionWitness]]]:
    """
    Greedily embeds the stars of ``spec`` one after the other, trying
    centres by decreasing degree.

    This is a heuristic: success proves containment, failure proves
    nothing and callers must fall back to the exact deciders.

    Returns
    -------
    Optional[List[BergeWitness or ExpansionWitness]]
        One witness per star, relative to ``star(d_j)``, with pairwise
        disjoint skeletons and distinct hyperedges (in expansion mode all
        hyperedges are pairwise disjoint). ``None`` on failure.
    """
    if not isinstance(spec, StarForestSpec):
        spec = StarForestSpec(spec)
    mode = Mode(mode)
    if mode == Mode.SUB:
        raise ValueError("greedy embedding supports berge and expansion modes")
    view = H.view()
    centers = sorted(range(H.n), key=lambda x: (-view.degree(x), x))
    used_vertices: Set[int] = set()
    used_edges: Set[int] = set()
    witnesses = []
    for ell in spec:
        witness = None
        for c in centers:
            if c in used_vertices or view.degree(c) < ell:
                continue
            if mode == Mode.BERGE:
                pairs = _star_matching(
                    view, c, ell, used_edges, used_vertices | {c}
                )
                if pairs is not None:
                    witness = _star_witness(c, pairs)
                    used_vertices.add(c)
                    used_vertices.update(leaf for _, leaf in pairs)
                    used_edges.update(h for h, _ in pairs)
            else:
                chosen = _greedy_expanded_star(view, c, ell, used_vertices)
                if chosen is not None:
                    vertex_map, edge_map, fills = {0: c}, {}, {}
                    for i, h in enumerate(chosen, start=1):
                        rest = sorted(view.edge_sets[h] - {c})
                        vertex_map[i] = rest[0]
                        edge_map[(0, i)] = h
                        fills[(0, i)] = tuple(rest[1:])
                        used_vertices.update(view.edges[h])
                    witness = ExpansionWitness(vertex_map, edge_map, fills)
            if witness is not None:
                break
        if witness is None:
            return None
        witnesses.append(witness)
    return witnesses
