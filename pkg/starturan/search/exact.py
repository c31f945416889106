"""
Exact Turán numbers of small instances by branch and bound.

The search walks the ``r``-sets in colex order and grows an edge set that
stays free of the family. Every node keeps the list of later candidates that
can still be added on their own, so a branch is cut as soon as the current
size plus the remaining candidates cannot beat the best size found.
Freeness is monotone under edge deletion, so when a candidate joins, only
copies through that candidate need to be looked for.
"""

import itertools
import os
import time
from typing import Dict, List, Tuple

import networkx as nx
from joblib import Parallel, delayed
from tqdm import tqdm

from starturan.hypergraph import to_text
from starturan.search.family import ForbiddenFamily
from starturan.types import Edge, Hypergraph, IncidenceView
from starturan.utils import binom

#: Largest number of candidate r-sets searched when no budget is given.
DEFAULT_BUDGET = 64


class BudgetExceededError(RuntimeError):
    """Raised when ``C(n, r)`` exceeds the configured search budget."""


def default_budget() -> int:
    """``DEFAULT_BUDGET``, overridden by the ``TURAN_BUDGET`` environment
    variable."""
    value = os.environ.get("TURAN_BUDGET")
    if value is None or value.strip() == "":
        return DEFAULT_BUDGET
    try:
        budget = int(value)
    except ValueError:
        raise ValueError(f"TURAN_BUDGET must be an integer, got {value!r}") from None
    if budget < 0:
        raise ValueError("TURAN_BUDGET must be non-negative")
    return budget


class SearchResult:
    """Summary of an exact search."""

    __slots__ = ["n", "r", "value", "witness", "nodes_explored", "elapsed"]

    def __init__(
        self,
        n: int,
        r: int,
        value: int,
        witness: Hypergraph,
        nodes_explored: int,
        elapsed: float,
    ):
        self.n = n
        self.r = r
        self.value = value  #:int: the Turán number
        self.witness = witness  #:Hypergraph: an extremal hypergraph
        self.nodes_explored = nodes_explored  #:int: search tree nodes visited
        self.elapsed = elapsed  #:float: wall time in seconds

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "value": self.value,
            "witness": to_text(self.witness),
            "nodes_explored": self.nodes_explored,
            "elapsed": self.elapsed,
        }

    def __repr__(self):
        string = (
            "Turán number: {0}.\nVertices: {1}.\nUniformity: {2}.\n"
            "Nodes explored: {3}.\nTotal time: {4}"
        ).format(self.value, self.n, self.r, self.nodes_explored, self.elapsed)
        return string


def colex_candidates(n: int, r: int) -> List[Edge]:
    """All ``r``-subsets of ``range(n)`` in colex order."""
    return sorted(itertools.combinations(range(n), r), key=lambda c: c[::-1])


def refinement_code(incidence: nx.Graph) -> str:
    """Weisfeiler-Lehman hash of an incidence graph, an isomorphism
    invariant of the hypergraph."""
    return nx.weisfeiler_lehman_graph_hash(incidence, node_attr="kind")


def _same_kind(a: dict, b: dict) -> bool:
    return a["kind"] == b["kind"]


class TuranProblem:
    """
    Exact Turán number ``ex_r(n, family)`` by depth-first branch and bound.

    Parameters
    ----------
    n : int
        Number of vertices.
    r : int
        Uniformity.
    family : ForbiddenFamily
        Forbidden patterns.
    linear_only : bool, optional
        Restrict to linear hosts. Defaults to ``family.linear_only``.
    budget : int, optional
        Largest allowed ``C(n, r)``, by default ``default_budget()``.
    prune_isomorphs : bool, optional
        Skip a branch when an earlier sibling produced an isomorphic edge
        set, by default True. Pruning never changes the value.
    num_jobs : int, optional
        Number of joblib workers over the top-level subtrees, by default 1.
        The value does not depend on it.
    verbose : bool, optional
        Print a summary line when done, by default False.
    disable_progress_bar : bool, optional
        Disable the tqdm bar over top-level subtrees, by default True.
    """

    def __init__(
        self,
        n: int,
        r: int,
        family: ForbiddenFamily,
        linear_only: bool = None,
        budget: int = None,
        prune_isomorphs: bool = True,
        num_jobs: int = 1,
        verbose: bool = False,
        disable_progress_bar: bool = True,
    ):
        if r != family.r:
            raise ValueError(f"family is for r={family.r}, search asks r={r}")
        self.n = n
        self.r = r
        self.family = family
        self.linear_only = family.linear_only if linear_only is None else linear_only
        self.budget = default_budget() if budget is None else budget
        self.prune_isomorphs = prune_isomorphs
        self.num_jobs = num_jobs
        self.verbose = verbose
        self.disable_progress_bar = disable_progress_bar

        self._best_size = 0
        self._best_edges: List[Edge] = []
        self._nodes = 0

    def _compatible(self, view: IncidenceView, pool: List[Edge]) -> List[Edge]:
        """Candidates of ``pool`` that can join the current edge set, whose
        last edge was just added."""
        newest = view.edge_sets[-1]
        out = []
        for c in pool:
            if self.linear_only and len(newest.intersection(c)) > 1:
                continue
            h = view.add_edge(c)
            free = self.family.find(view, anchor=h) is None
            view.pop_edge()
            if free:
                out.append(c)
        return out

    def _branches(self, view: IncidenceView, pool: List[Edge]) -> List[int]:
        """Positions of ``pool`` worth branching on. A candidate is skipped
        when adding it gives a hypergraph isomorphic to the one an earlier
        sibling gives."""
        if not self.prune_isomorphs or len(pool) < 2:
            return list(range(len(pool)))
        kept = []
        classes: Dict[str, List[nx.Graph]] = {}
        for idx, c in enumerate(pool):
            graph = Hypergraph(self.n, view.edges + [c]).incidence_graph()
            code = refinement_code(graph)
            bucket = classes.setdefault(code, [])
            if any(
                nx.is_isomorphic(graph, other, node_match=_same_kind)
                for other in bucket
            ):
                continue
            bucket.append(graph)
            kept.append(idx)
        return kept

    def _dfs(self, view: IncidenceView, pool: List[Edge]):
        self._nodes += 1
        if view.m > self._best_size:
            self._best_size = view.m
            self._best_edges = list(view.edges)
        for idx in self._branches(view, pool):
            if view.m + len(pool) - idx <= self._best_size:
                break
            view.add_edge(pool[idx])
            child = self._compatible(view, pool[idx + 1 :])
            self._dfs(view, child)
            view.pop_edge()

    def _subtree(self, root: List[Edge], pool: List[Edge], idx: int, floor: int):
        """Explores the subtree below ``root + pool[idx]`` on its own."""
        self._best_size, self._best_edges, self._nodes = floor, [], 0
        view = IncidenceView(self.n, root)
        view.add_edge(pool[idx])
        child = self._compatible(view, pool[idx + 1 :])
        self._dfs(view, child)
        return self._best_size, self._best_edges, self._nodes

    def _root(self) -> Tuple[IncidenceView, List[Edge]]:
        candidates = colex_candidates(self.n, self.r)
        view = IncidenceView(self.n)
        first = candidates[0]
        h = view.add_edge(first)
        if self.family.find(view, anchor=h) is not None:
            view.pop_edge()
            return view, []
        return view, self._compatible(view, candidates[1:])

    def solve(self) -> SearchResult:
        """
        Runs the search.

        Raises
        ------
        BudgetExceededError
            If ``C(n, r)`` exceeds the budget.
        """
        total = binom(self.n, self.r)
        if total > self.budget:
            raise BudgetExceededError(
                f"C({self.n}, {self.r}) = {total} exceeds the search budget "
                f"{self.budget}"
            )
        start = time.time()
        self._best_size, self._best_edges, self._nodes = 0, [], 1
        if total > 0:
            # Every nonempty free set is isomorphic to one containing the
            # first colex r-set, so the root fixes it.
            view, pool = self._root()
            if view.m > 0:
                self._best_size, self._best_edges = 1, list(view.edges)
                if self.num_jobs == 1:
                    self._nodes = 0
                    self._dfs(view, pool)
                else:
                    self._solve_parallel(view, pool)

        result = SearchResult(
            self.n,
            self.r,
            self._best_size,
            Hypergraph(self.n, self._best_edges),
            self._nodes,
            time.time() - start,
        )
        if self.verbose:
            print(
                f"ex_{self.r}({self.n}) = {result.value} "
                f"({result.nodes_explored} nodes, {result.elapsed:.3f} s)"
            )
        return result

    def _solve_parallel(self, view: IncidenceView, pool: List[Edge]):
        root = list(view.edges)
        branches = self._branches(view, pool)
        outcomes = Parallel(n_jobs=self.num_jobs)(
            delayed(self._subtree)(root, pool, idx, 1)
            for idx in tqdm(branches, disable=self.disable_progress_bar)
        )
        self._nodes = 1
        for size, edges, nodes in outcomes:
            self._nodes += nodes
            if size > self._best_size:
                self._best_size, self._best_edges = size, edges


def ex_exact(
    n: int, r: int, family: ForbiddenFamily, budget: int = None, **kwargs
) -> SearchResult:
    """
    Exact Turán number of ``family`` over ``n``-vertex ``r``-uniform hosts,
    linear hosts only when ``family.linear_only`` is set. Extra keyword
    arguments go to ``TuranProblem``.
    """
    return TuranProblem(n, r, family, budget=budget, **kwargs).solve()


def ex_exact_linear(
    n: int, r: int, family: ForbiddenFamily, budget: int = None, **kwargs
) -> SearchResult:
    """Exact linear Turán number: ``ex_exact`` restricted to linear hosts."""
    return TuranProblem(
        n, r, family, linear_only=True, budget=budget, **kwargs
    ).solve()
