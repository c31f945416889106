"""
Randomized lower bounds for Turán numbers.
"""

import itertools
from typing import List

import numpy as np

from starturan.search.family import ForbiddenFamily
from starturan.types import Edge, Hypergraph, IncidenceView


def _can_add(n: int, edges: List[Edge], c: Edge, family: ForbiddenFamily) -> bool:
    if family.linear_only and any(len(set(e).intersection(c)) > 1 for e in edges):
        return False
    view = IncidenceView(n, edges)
    h = view.add_edge(c)
    return family.find(view, anchor=h) is None


def ex_lower_local_search(
    n: int,
    r: int,
    family: ForbiddenFamily,
    iterations: int = 1000,
    seed: int = None,
) -> Hypergraph:
    """
    Hill climbing over free ``r``-uniform hypergraphs.

    Every iteration draws a missing ``r``-set. It is added when the result
    stays free. Otherwise one random edge meeting it is swapped out, and the
    swap is kept only if the result is free. The largest hypergraph seen is
    returned, so its size is a lower bound on ``ex_r(n, family)``.

    Parameters
    ----------
    n : int
        Number of vertices.
    r : int
        Uniformity, must match ``family.r``.
    family : ForbiddenFamily
        Forbidden patterns; ``family.linear_only`` restricts to linear hosts.
    iterations : int, optional
        Number of moves, by default 1000.
    seed : int, optional
        Seed of the numpy generator. Equal seeds give equal outputs.

    Returns
    -------
    Hypergraph
        A free hypergraph.
    """
    if r != family.r:
        raise ValueError(f"family is for r={family.r}, search asks r={r}")
    rng = np.random.default_rng(seed)
    candidates = list(itertools.combinations(range(n), r))
    current: List[Edge] = []
    present = set()
    best: List[Edge] = []
    for _ in range(iterations):
        missing = [c for c in candidates if c not in present]
        if not missing:
            break
        c = missing[rng.integers(len(missing))]
        if _can_add(n, current, c, family):
            current.append(c)
            present.add(c)
        else:
            meeting = [j for j, e in enumerate(current) if set(e).intersection(c)]
            if not meeting:
                continue
            j = meeting[rng.integers(len(meeting))]
            rest = current[:j] + current[j + 1 :]
            if _can_add(n, rest, c, family):
                present.discard(current[j])
                current = rest + [c]
                present.add(c)
        if len(current) > len(best):
            best = list(current)
    return Hypergraph(n, best)
