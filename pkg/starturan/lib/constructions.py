"""
Lower-bound constructions: explicit hypergraphs without a given star forest
whose edge counts match the terms of the Turán bounds.

Every generator returns a ``ConstructionReport`` recording the hypergraph,
its parameters, the edge count promised by the construction
(``claimed_count``) and the corresponding bound term (``formula_value``).
"""

import itertools
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from starturan.formulas import ex_expansion_rhs, ex_linear_rhs
from starturan.hypergraph import grid_lines
from starturan.lib.oracles import default_oracle
from starturan.types import Edge, Hypergraph, Mode, StarForestSpec
from starturan.utils import binom, ceil_div, format_fraction

SpecLike = Union[StarForestSpec, Sequence[int]]


def _spec(spec: SpecLike) -> StarForestSpec:
    if isinstance(spec, StarForestSpec):
        return spec
    return StarForestSpec(spec)


class ConstructionReport:
    """
    A constructed hypergraph with its bookkeeping.
    """

    __slots__ = [
        "family",
        "hypergraph",
        "parameters",
        "claimed_count",
        "formula_value",
        "target_mode",
        "linear",
        "verified_free",
        "details",
    ]

    def __init__(
        self,
        family: str,
        hypergraph: Hypergraph,
        parameters: Dict[str, Any],
        claimed_count: int,
        formula_value: Fraction,
        target_mode: Mode,
        linear: bool = False,
        details: Dict[str, Any] = None,
    ):
        self.family = family  #:str: name of the construction
        self.hypergraph = hypergraph  #:Hypergraph: the witness
        #:Dict[str, Any]: n, r, spec and the chosen index
        self.parameters = parameters
        #:int: edge count promised by the construction
        self.claimed_count = claimed_count
        #:Fraction: bound term the construction is compared with
        self.formula_value = Fraction(formula_value)
        #:Mode: notion of freeness the witness is built for
        self.target_mode = target_mode
        self.linear = linear  #:bool: whether the witness is meant to be linear
        #:Optional[bool]: set once the witness has been checked
        self.verified_free: Optional[bool] = None
        self.details = details or {}  #:Dict[str, Any]: construction internals

    @property
    def num_edges(self) -> int:
        return self.hypergraph.m

    def count_matches(self) -> bool:
        return self.claimed_count == self.hypergraph.m

    @property
    def spec(self) -> StarForestSpec:
        return StarForestSpec.from_string(self.parameters["spec"])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family,
            "parameters": dict(self.parameters),
            "num_vertices": self.hypergraph.n,
            "num_edges": self.hypergraph.m,
            "claimed_count": self.claimed_count,
            "formula_value": format_fraction(self.formula_value),
            "target_mode": self.target_mode.value,
            "linear": self.linear,
            "verified_free": self.verified_free,
            "details": dict(self.details),
        }

    def __repr__(self) -> str:
        return (
            f"ConstructionReport({self.family}, {self.parameters}, "
            f"edges={self.hypergraph.m}, claimed={self.claimed_count})"
        )


def _check_index(spec: StarForestSpec, i: int, low: int = 1, high: int = None):
    high = spec.k if high is None else high
    if i < low or i > high:
        raise ValueError(f"index {i} outside {low}..{high}")


def _near_regular_graph(vertices: Sequence[int], t: int) -> List[Edge]:
    """Circulant graph of maximum degree ``t`` with
    ``floor(t * m / 2)`` edges on ``m = len(vertices) > t`` vertices."""
    m = len(vertices)
    edges = []
    for jump in range(1, t // 2 + 1):
        edges.extend((vertices[j], vertices[(j + jump) % m]) for j in range(m))
    if t % 2 == 1:
        half = m // 2
        if m % 2 == 0:
            edges.extend((vertices[j], vertices[j + half]) for j in range(half))
        else:
            edges.extend(
                (vertices[j], vertices[j + (m - 1) // 2])
                for j in range((m - 1) // 2)
            )
    return edges


def expansion_witness(n: int, r: int, spec: SpecLike, i: int) -> ConstructionReport:
    """
    Witness without the expanded star forest, built from index ``i``.

    ``A = {0, ..., i-2}`` and every ``r``-set meeting ``A`` is an edge. The
    rest ``B`` carries a hypergraph without an expanded ``S_{d_i}``: all
    ``r``-sets through the fixed pair ``{i-1, i}`` when ``r >= 3``, a graph
    of maximum degree ``d_i - 1`` with ``floor((d_i-1)(n-i+1)/2)`` edges
    when ``r = 2``, and nothing when ``d_i = 1``.

    Raises
    ------
    ValueError
        If ``n < i - 1 + r``, or ``r = 2`` and ``n - i + 1 < d_i``.
    """
    spec = _spec(spec)
    _check_index(spec, i)
    if r < 2:
        raise ValueError("uniformity r must be at least 2")
    rest = n - i + 1
    d = spec.d(i)
    if rest < r:
        raise ValueError(f"need n >= i - 1 + r, got n={n}, i={i}, r={r}")
    if r == 2 and d >= 2 and rest < d:
        raise ValueError(f"need n - i + 1 >= d_i = {d} for r = 2")

    edges = [c for c in itertools.combinations(range(n), r) if c[0] < i - 1]
    a_part = len(edges)
    if d >= 2 and r >= 3:
        pair = (i - 1, i)
        edges.extend(
            pair + c for c in itertools.combinations(range(i + 1, n), r - 2)
        )
        b_count = binom(rest - 2, r - 2)
    elif d >= 2:
        edges.extend(_near_regular_graph(list(range(i - 1, n)), d - 1))
        b_count = (d - 1) * rest // 2
    else:
        b_count = 0

    H = Hypergraph(n, edges)
    term = ex_expansion_rhs(n, r, spec, default_oracle(r)).per_index_values[i]
    return ConstructionReport(
        "expansion",
        H,
        {"n": n, "r": r, "spec": str(spec), "i": i},
        claimed_count=binom(n, r) - binom(rest, r) + b_count,
        formula_value=term,
        target_mode=Mode.EXPANSION,
        details={"a_part": a_part, "b_part": H.m - a_part},
    )


def _linear_packing(vertices: Sequence[int], r: int) -> List[Edge]:
    """Greedy family of ``r``-sets pairwise sharing at most one vertex."""
    chosen: List[Edge] = []
    covered_pairs = set()
    for c in itertools.combinations(vertices, r):
        pairs = set(itertools.combinations(c, 2))
        if pairs & covered_pairs:
            continue
        chosen.append(c)
        covered_pairs |= pairs
    return chosen


def linear_witness(n: int, r: int, spec: SpecLike, i: int) -> ConstructionReport:
    """
    Linear witness without the expanded star forest, built from index ``i``.

    ``A* = {a_0, ..., a_{i-2}}`` and the remaining ``n - i + 1`` vertices are
    cut into blocks, each a copy of ``[r-1]^(i-1) x [r]^(d_i-1)``. Within a
    block, lines along an ``[r]`` coordinate are edges, and lines along the
    ``j``-th ``[r-1]`` coordinate are edges once ``a_j`` is added. A greedy
    linear packing of ``r``-sets inside ``A*`` completes the hypergraph.

    Raises
    ------
    ValueError
        If the block size does not divide ``n - i + 1``.
    """
    spec = _spec(spec)
    _check_index(spec, i)
    if r < 2:
        raise ValueError("uniformity r must be at least 2")
    rest = n - i + 1
    d = spec.d(i)
    shape = (r - 1,) * (i - 1) + (r,) * (d - 1)
    block = (r - 1) ** (i - 1) * r ** (d - 1)
    if rest <= 0 or rest % block != 0:
        raise ValueError(
            f"block size {block} must divide n - i + 1 = {rest}"
        )

    lines = grid_lines(shape, include_trivial=True)
    c_star, d_star = [], []
    for offset in range(i - 1, n, block):
        for line, j in lines:
            shifted = tuple(v + offset for v in line)
            if j < i - 1:
                d_star.append((j,) + shifted)
            else:
                c_star.append(shifted)
    packing = _linear_packing(range(i - 1), r)
    H = Hypergraph(n, c_star + d_star + packing)
    return ConstructionReport(
        "linear",
        H,
        {"n": n, "r": r, "spec": str(spec), "i": i},
        claimed_count=len(c_star) + len(d_star) + len(packing),
        formula_value=ex_linear_rhs(n, r, spec).per_index_values[i],
        target_mode=Mode.EXPANSION,
        linear=True,
        details={
            "c_star": len(c_star),
            "d_star": len(d_star),
            "a_packing": len(packing),
            "a_packing_cap": binom(i - 1, 2) // binom(r, 2),
        },
    )


def _regular_uniform_edges(m: int, u: int, d: int) -> List[Edge]:
    if d < 0 or u < 1 or m < 0:
        raise ValueError("need m >= 0, u >= 1 and d >= 0")
    if d == 0:
        return []
    if m % u != 0:
        raise ValueError(f"uniformity {u} must divide the vertex count {m}")
    if d > u:
        raise ValueError(f"shifted matchings give degree at most u = {u}")
    if m == u and d >= 2:
        raise ValueError("all shifted matchings coincide when m = u")
    edges = []
    for t in range(d):
        for j in range(m // u):
            edges.append(tuple(sorted((t + j * u + c) % m for c in range(u))))
    return edges


def regular_uniform(m: int, u: int, d: int) -> Hypergraph:
    """
    A ``d``-regular ``u``-uniform hypergraph on ``m`` vertices made of the
    ``d`` shifted perfect matchings whose blocks are
    ``{(t + j u + c) mod m : c = 0..u-1}`` for ``t = 0..d-1``.

    Raises
    ------
    ValueError
        Unless ``d = 0``, or ``u`` divides ``m``, ``d <= u`` and
        ``m > u`` when ``d >= 2``.
    """
    return Hypergraph(m, _regular_uniform_edges(m, u, d))


def berge_regular_witness(
    n: int, r: int, spec: SpecLike, s: int
) -> ConstructionReport:
    """
    Witness without a Berge star forest from the regular construction:
    a ``(d_{s+1} - 1)``-regular ``(r - s)``-uniform hypergraph on the last
    ``n - s`` vertices, with the first ``s`` vertices added to every edge.
    ``s = 0`` gives a plain ``(d_1 - 1)``-regular hypergraph.

    Raises
    ------
    ValueError
        If ``s`` is outside ``0..k-1``, ``r - s < d_{s+1}``, or ``r - s``
        does not divide ``n - s``.
    """
    spec = _spec(spec)
    _check_index(spec, s, low=0, high=spec.k - 1)
    d = spec.d(s + 1)
    u, rest = r - s, n - s
    if u < d:
        raise ValueError(f"need r - s >= d_(s+1), got {u} < {d}")
    if rest < 0 or rest % u != 0:
        raise ValueError(f"r - s = {u} must divide n - s = {rest}")
    a_star = tuple(range(s))
    edges = [
        a_star + tuple(v + s for v in e)
        for e in _regular_uniform_edges(rest, u, d - 1)
    ]
    return ConstructionReport(
        "berge-regular",
        Hypergraph(n, edges),
        {"n": n, "r": r, "spec": str(spec), "s": s},
        claimed_count=(d - 1) * rest // u,
        formula_value=Fraction(d - 1, u) * rest,
        target_mode=Mode.BERGE,
    )


def berge_block_witness(n: int, r: int, spec: SpecLike, i: int) -> ConstructionReport:
    """
    Witness without a Berge star forest from the block construction.

    ``A* = {0, ..., i-2}`` and the other ``n - i + 1 = q d_i + t`` vertices
    form ``q`` classes of size ``d_i`` plus one class of size ``t`` when
    ``t > 0``. Every class ``S`` spans a complete ``r``-uniform hypergraph
    on ``A* | S``.
    """
    spec = _spec(spec)
    _check_index(spec, i)
    if r < 2:
        raise ValueError("uniformity r must be at least 2")
    rest = n - i + 1
    if rest < 0:
        raise ValueError(f"need n >= i - 1, got n={n}, i={i}")
    d = spec.d(i)
    q, t = divmod(rest, d)
    a_star = list(range(i - 1))
    edges = list(itertools.combinations(a_star, r))
    starts = list(range(i - 1, n, d))
    for start in starts:
        members = a_star + list(range(start, min(start + d, n)))
        edges.extend(itertools.combinations(members, r))

    full = binom(d + i - 1, r) - binom(i - 1, r)
    partial = binom(t + i - 1, r) - binom(i - 1, r) if t > 0 else 0
    return ConstructionReport(
        "berge-block",
        Hypergraph(n, edges),
        {"n": n, "r": r, "spec": str(spec), "i": i},
        claimed_count=full * q + partial + binom(i - 1, r),
        formula_value=full * ceil_div(rest, d) + binom(i - 1, r),
        target_mode=Mode.BERGE,
        details={"q": q, "t": t},
    )


WITNESS_FAMILIES: Dict[str, Callable[..., ConstructionReport]] = {
    "expansion": expansion_witness,
    "linear": linear_witness,
    "berge-regular": berge_regular_witness,
    "berge-block": berge_block_witness,
}


def index_range(family: str, spec: SpecLike) -> range:
    """Indices accepted by a witness family."""
    spec = _spec(spec)
    if family == "berge-regular":
        return range(0, spec.k)
    return range(1, spec.k + 1)


def best_witness(
    family: str, n: int, r: int, spec: SpecLike
) -> Optional[ConstructionReport]:
    """
    The feasible index giving the most edges, smallest index on ties.
    Returns ``None`` when no index is feasible.
    """
    try:
        build = WITNESS_FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown witness family {family!r}") from None
    best = None
    for index in index_range(family, spec):
        try:
            report = build(n, r, spec, index)
        except ValueError:
            continue
        if best is None or report.num_edges > best.num_edges:
            best = report
    return best
