"""
Concrete suppliers of the star Turán value ``ex_r(m, S^+_ell)``.
"""

from typing import Callable

from starturan.types import StarTuranOracle
from starturan.utils import binom


class GraphStarOracle(StarTuranOracle):
    """
    Exact value for graphs (``r = 2``): a graph with maximum degree below
    ``ell`` has at most ``floor((ell - 1) m / 2)`` edges, and near-regular
    graphs attain it.
    """

    def evaluate(self, m: int, ell: int, r: int) -> int:
        if r != 2:
            raise ValueError("GraphStarOracle is exact only for r = 2")
        return (ell - 1) * max(m, 0) // 2


class FixedPairOracle(StarTuranOracle):
    """
    Lower bound from the hypergraph of all ``r``-sets through a fixed pair
    of vertices, which has no expanded ``S_2``. Zero for ``ell = 1``, where
    only the empty hypergraph qualifies.
    """

    def evaluate(self, m: int, ell: int, r: int) -> int:
        if ell <= 1:
            return 0
        return binom(m - 2, r - 2)


class ZeroOracle(StarTuranOracle):
    """Constant zero, exact for ``ell = 1``."""

    def evaluate(self, m: int, ell: int, r: int) -> int:
        return 0


class CallableOracle(StarTuranOracle):
    """Wraps a user function ``(m, ell, r) -> int``."""

    def __init__(self, fn: Callable[[int, int, int], int]):
        self.fn = fn

    def evaluate(self, m: int, ell: int, r: int) -> int:
        return int(self.fn(m, ell, r))


def default_oracle(r: int) -> StarTuranOracle:
    """The exact oracle for graphs, the fixed-pair bound otherwise."""
    if r == 2:
        return GraphStarOracle()
    return FixedPairOracle()
