"""
Exact evaluators for the Turán bounds of star forests.

Every evaluator returns a ``BoundResult`` holding the value of the outer
maximum, the index attaining it, and the value at every index. Values are
exact (``Fraction``) and floors are applied only where the bound counts
edges of a graph.
"""

import math
from fractions import Fraction
from typing import Any, Dict, Hashable, Sequence, Union

from starturan.types import StarForestSpec, StarTuranOracle
from starturan.utils import binom, ceil_div, format_fraction, fraction_decimal

SpecLike = Union[StarForestSpec, Sequence[int]]


def _spec(spec: SpecLike) -> StarForestSpec:
    if isinstance(spec, StarForestSpec):
        return spec
    return StarForestSpec(spec)


class BoundResult:
    """
    Value of a bound written as a maximum over an index, together with the
    maximizing index. Ties go to the index inserted first, which is the
    smallest index.
    """

    __slots__ = ["name", "value", "argmax_index", "per_index_values", "alternates"]

    def __init__(
        self,
        per_index_values: Dict[Hashable, Fraction],
        name: str = "",
        alternates: Dict[Hashable, Fraction] = None,
    ):
        if len(per_index_values) == 0:
            raise ValueError(f"{name or 'bound'}: every index is vacuous")
        self.name = name  #:str: name of the bound
        #:Dict[Hashable, Fraction]: value at every non-vacuous index
        self.per_index_values = {
            key: Fraction(v) for key, v in per_index_values.items()
        }
        best_key, best = None, None
        for key, v in self.per_index_values.items():
            if best is None or v > best:
                best_key, best = key, v
        self.value: Fraction = best  #:Fraction: the maximum
        self.argmax_index = best_key  #:Hashable: first index attaining it
        #:Dict[Hashable, Fraction]: companion values reported alongside
        self.alternates = {
            key: Fraction(v) for key, v in (alternates or {}).items()
        }

    def floor(self) -> int:
        return math.floor(self.value)

    def is_integer(self) -> bool:
        return self.value.denominator == 1

    def to_dict(self) -> Dict[str, Any]:
        def key_out(key):
            return list(key) if isinstance(key, tuple) else key

        return {
            "name": self.name,
            "value": format_fraction(self.value),
            "decimal": fraction_decimal(self.value),
            "argmax_index": key_out(self.argmax_index),
            "per_index": [
                [key_out(key), format_fraction(v)]
                for key, v in self.per_index_values.items()
            ],
            "alternates": [
                [key_out(key), format_fraction(v)]
                for key, v in self.alternates.items()
            ],
        }

    def __repr__(self) -> str:
        return (
            f"BoundResult({self.name}: value={format_fraction(self.value)}, "
            f"argmax={self.argmax_index})"
        )


def ex_llp(n: int, spec: SpecLike) -> BoundResult:
    """
    Turán number of a star forest in graphs:

    .. math::
        \\max_i \\{(i-1)(n-i+1) + \\binom{i-1}{2}
        + \\lfloor \\frac{d_i-1}{2}(n-i+1) \\rfloor\\}
    """
    spec = _spec(spec)
    values = {}
    for i in range(1, spec.k + 1):
        rest = n - i + 1
        if rest < 0:
            continue
        values[i] = (
            (i - 1) * rest + binom(i - 1, 2) + (spec.d(i) - 1) * rest // 2
        )
    return BoundResult(values, name="llp")


def ex_erdos_matching(n: int, r: int, k: int) -> int:
    """Turán number of the expanded matching ``M_k^+``:
    ``C(n, r) - C(n-k+1, r)``."""
    if k < 1:
        raise ValueError("matching size k must be at least 1")
    if r < 2:
        raise ValueError("uniformity r must be at least 2")
    return binom(n, r) - binom(n - k + 1, r)


def _oracle_value(oracle: StarTuranOracle, m: int, ell: int, r: int) -> int:
    value = oracle(m, ell, r)
    if value < 0:
        raise ValueError(f"star oracle returned negative value at m={m}")
    if m > 0 and oracle(m - 1, ell, r) > value:
        raise ValueError(f"star oracle decreases between m={m - 1} and m={m}")
    return value


def ex_expansion_rhs(
    n: int, r: int, spec: SpecLike, oracle: StarTuranOracle
) -> BoundResult:
    """
    Turán bound for the expansion of a star forest,

    .. math::
        \\max_i \\{\\binom{n}{r} - \\binom{n-i+1}{r}
        + ex_r(n-i+1, S^+_{d_i})\\},

    with the star term supplied by ``oracle``.

    Raises
    ------
    ValueError
        If the oracle is negative or decreasing at a queried point.
    """
    spec = _spec(spec)
    values = {}
    for i in range(1, spec.k + 1):
        rest = n - i + 1
        if rest < 0:
            continue
        values[i] = (
            binom(n, r) - binom(rest, r) + _oracle_value(oracle, rest, spec.d(i), r)
        )
    return BoundResult(values, name="expansion")


def ex_linear_rhs(n: int, r: int, spec: SpecLike) -> BoundResult:
    """
    Linear Turán bound for the expansion of a star forest,

    .. math::
        \\max_i \\{(\\frac{d_i-1}{r} + \\frac{i-1}{r-1})(n-i+1)
        + \\binom{i-1}{2} / \\binom{r}{2}\\}
    """
    if r < 2:
        raise ValueError("uniformity r must be at least 2")
    spec = _spec(spec)
    values = {}
    for i in range(1, spec.k + 1):
        rest = n - i + 1
        if rest < 0:
            continue
        slope = Fraction(spec.d(i) - 1, r) + Fraction(i - 1, r - 1)
        values[i] = slope * rest + Fraction(binom(i - 1, 2), binom(r, 2))
    return BoundResult(values, name="linear")


def ex_berge_large_r_rhs(n: int, r: int, spec: SpecLike) -> BoundResult:
    """
    Berge bound for large uniformity, a maximum over ``s = 1..k-1`` of
    ``(d_{s+1} - 1) / (r - s) * (n - s)``.
    """
    spec = _spec(spec)
    if spec.k < 2:
        raise ValueError("the large-r Berge bound needs at least two stars")
    values = {}
    for s in range(1, spec.k):
        if n - s < 0 or r - s <= 0:
            continue
        values[s] = Fraction(spec.d(s + 1) - 1, r - s) * (n - s)
    return BoundResult(values, name="berge-large-r")


def ex_berge_small_r_rhs(n: int, r: int, spec: SpecLike) -> BoundResult:
    """
    Berge bound for small uniformity. Three families of terms compete:

        - ``("block", i)``: ``(C(d_i+i-1, r) - C(i-1, r)) * ceil((n-i+1)/d_i)
          + C(i-1, r)``;
        - ``("ratio", i)``: ``(d_i - 1) / (r - i + 1) * (n - i + 1)``;
        - ``("c", c)`` for ``1 <= c < k - 1``:
          ``max(C(d_c+c, r-1), d_c+c) / (r - c) * (n - c)``.

    The exact-remainder block count, which is what the block construction
    achieves, is reported under ``alternates`` as ``("remainder", i)``.
    """
    spec = _spec(spec)
    if spec.k < 2:
        raise ValueError("the small-r Berge bound needs at least two stars")
    values = {}
    alternates = {}
    for i in range(1, spec.k + 1):
        rest = n - i + 1
        if rest < 0:
            continue
        d = spec.d(i)
        full = binom(d + i - 1, r) - binom(i - 1, r)
        values[("block", i)] = full * ceil_div(rest, d) + binom(i - 1, r)
        if r - i + 1 > 0:
            values[("ratio", i)] = Fraction(d - 1, r - i + 1) * rest
        q, t = divmod(rest, d)
        partial = binom(t + i - 1, r) - binom(i - 1, r) if t > 0 else 0
        alternates[("remainder", i)] = full * q + partial + binom(i - 1, r)
    for c in range(1, spec.k - 1):
        if r - c <= 0 or n - c < 0:
            continue
        top = max(binom(spec.d(c) + c, r - 1), spec.d(c) + c)
        values[("c", c)] = Fraction(top, r - c) * (n - c)
    return BoundResult(values, name="berge-small-r", alternates=alternates)


def is_large_r(r: int, spec: SpecLike) -> bool:
    """True when ``r >= d_1 + k - 1``, the regime of the large-r bound."""
    spec = _spec(spec)
    return r >= spec.d(1) + spec.k - 1


def ex_berge_rhs(n: int, r: int, spec: SpecLike) -> BoundResult:
    """The Berge bound of the regime ``r`` falls into."""
    if is_large_r(r, spec):
        return ex_berge_large_r_rhs(n, r, spec)
    return ex_berge_small_r_rhs(n, r, spec)


def ex_clique_berge_rhs(n: int, r: int, spec: SpecLike) -> BoundResult:
    """
    Upper bound on the number of ``K_r`` copies in an ``n``-vertex graph
    without the star forest, obtained through the clique hypergraph. In the
    large-r regime this is a maximum over ``i = 1..k`` of
    ``(d_i - 1) / (r - i + 1) * (n - i + 1)``. Otherwise it is the small-r
    Berge bound.
    """
    spec = _spec(spec)
    if not is_large_r(r, spec):
        result = ex_berge_small_r_rhs(n, r, spec)
        result.name = "clique-berge"
        return result
    values = {}
    for i in range(1, spec.k + 1):
        rest = n - i + 1
        if rest < 0 or r - i + 1 <= 0:
            continue
        values[i] = Fraction(spec.d(i) - 1, r - i + 1) * rest
    return BoundResult(values, name="clique-berge")


def ex_berge_star(n: int, r: int, ell: int) -> Fraction:
    """
    Turán bound for a Berge star ``S_ell`` in ``r``-uniform hypergraphs:
    ``C(ell, r) * n / ell`` when ``ell > r``, otherwise
    ``(ell - 1) / r * n``.
    """
    if r < 3:
        raise ValueError("the Berge star bound needs r >= 3")
    if ell < 1:
        raise ValueError("a star needs at least one leaf")
    if ell > r:
        return binom(ell, r) * Fraction(n, ell)
    return Fraction(ell - 1, r) * n


def fixed_pair_count(n: int, r: int) -> int:
    """Number of ``r``-sets of ``n`` vertices containing a fixed pair."""
    if r < 2:
        raise ValueError("uniformity r must be at least 2")
    return binom(n - 2, r - 2)


def ex_kp_expansion(
    n: int, r: int, ell: int, k: int, oracle: StarTuranOracle
) -> int:
    """Turán number of ``k`` disjoint expanded copies of ``S_ell``."""
    rest = n - k + 1
    return binom(n, r) - binom(rest, r) + _oracle_value(oracle, max(rest, 0), ell, r)


def ex_kp_linear(n: int, r: int, ell: int, k: int) -> Fraction:
    slope = Fraction(ell - 1, r) + Fraction(k - 1, r - 1)
    return slope * (n - k + 1) + Fraction(binom(k - 1, 2), binom(r, 2))


def ex_kp_berge_large_r(n: int, r: int, ell: int, k: int) -> Fraction:
    if r - k + 1 <= 0:
        raise ValueError("needs r >= k")
    return Fraction(ell - 1, r - k + 1) * (n - k + 1)


def ex_kp_berge_small_r(n: int, r: int, ell: int, k: int) -> int:
    full = binom(ell + k - 1, r) - binom(k - 1, r)
    return full * ceil_div(n - k + 1, ell) + binom(k - 1, r)
