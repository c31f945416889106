"""
Forbidden families and freeness verification.
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from starturan.patterns import (
    Witness,
    contains,
    expand,
    find_berge,
    find_expansion,
    find_sub,
    star_forest,
)
from starturan.types import Graph, Hypergraph, IncidenceView, Mode, StarForestSpec


class ForbiddenFamily:
    """
    A list of forbidden patterns, each with the containment notion it is
    forbidden under, for ``r``-uniform hosts.

    Parameters
    ----------
    patterns : Sequence[Tuple[Hypergraph, Mode]]
        Pattern and mode pairs. Berge and expansion patterns must be graphs,
        subhypergraph patterns must be ``r``-uniform.
    r : int
        Uniformity of the hosts.
    linear_only : bool, optional
        Restrict hosts to linear hypergraphs, by default False.
    """

    __slots__ = ["patterns", "r", "linear_only"]

    def __init__(
        self,
        patterns: Sequence[Tuple[Hypergraph, Union[Mode, str]]],
        r: int,
        linear_only: bool = False,
    ):
        if r < 2:
            raise ValueError("uniformity r must be at least 2")
        if len(patterns) == 0:
            raise ValueError("a forbidden family needs at least one pattern")
        checked: List[Tuple[Hypergraph, Mode]] = []
        for pattern, mode in patterns:
            mode = Mode(mode)
            if mode == Mode.SUB:
                if not pattern.is_uniform(r):
                    raise ValueError(f"subhypergraph pattern is not {r}-uniform")
            else:
                if not pattern.is_uniform(2):
                    raise ValueError(f"{mode.value} mode needs a graph pattern")
                if not isinstance(pattern, Graph):
                    pattern = Graph.from_hypergraph(pattern)
            checked.append((pattern, mode))
        #:List[Tuple[Hypergraph, Mode]]: the patterns with their modes
        self.patterns = checked
        self.r = r  #:int: host uniformity
        self.linear_only = linear_only  #:bool: linear hosts only

    @staticmethod
    def star_forest(
        spec: Union[StarForestSpec, Sequence[int]],
        mode: Union[Mode, str],
        r: int,
        linear_only: bool = False,
    ) -> "ForbiddenFamily":
        """The single star forest of ``spec`` under ``mode``. In
        subhypergraph mode the pattern is the expansion to ``r``."""
        mode = Mode(mode)
        F = star_forest(spec)
        pattern = expand(F, r) if mode == Mode.SUB else F
        return ForbiddenFamily([(pattern, mode)], r, linear_only)

    def find(self, view: IncidenceView, anchor: int = None) -> Optional[int]:
        """
        Index of the first pattern with a copy in ``view``, restricted to
        copies through hyperedge ``anchor`` when given; ``None`` if free.
        """
        for idx, (pattern, mode) in enumerate(self.patterns):
            if mode == Mode.SUB:
                found = find_sub(view, pattern, anchor)
            elif mode == Mode.BERGE:
                found = find_berge(view, pattern, anchor)
            else:
                found = find_expansion(view, pattern, self.r, anchor)
            if found is not None:
                return idx
        return None

    def is_free(self, H: Hypergraph) -> bool:
        return self.find(H.view()) is None

    def __repr__(self) -> str:
        items = ", ".join(f"{p!r}:{m.value}" for p, m in self.patterns)
        return (
            f"ForbiddenFamily([{items}], r={self.r}, "
            f"linear_only={self.linear_only})"
        )


class FreenessReport:
    """Outcome of ``verify_free``."""

    __slots__ = ["free", "violations", "linear"]

    def __init__(
        self,
        violations: List[Tuple[int, Mode, Witness]],
        linear: Optional[bool] = None,
    ):
        #:List[Tuple[int, Mode, Witness]]: first witness per violated pattern
        self.violations = violations
        #:Optional[bool]: host linearity, checked only for linear families
        self.linear = linear
        #:bool: no pattern is contained and linearity holds when required
        self.free = len(violations) == 0 and linear is not False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "free": self.free,
            "linear": self.linear,
            "violations": [
                {"pattern": idx, "mode": mode.value, "witness": w.to_dict()}
                for idx, mode, w in self.violations
            ],
        }

    def __repr__(self) -> str:
        return f"FreenessReport(free={self.free}, violations={len(self.violations)})"


def verify_free(H: Hypergraph, family: ForbiddenFamily) -> FreenessReport:
    """
    Runs the decider of every family entry on ``H``.

    Raises
    ------
    ValueError
        If an expansion-mode entry meets a host that is not ``r``-uniform.
    """
    violations = []
    for idx, (pattern, mode) in enumerate(family.patterns):
        witness = contains(H, pattern, mode, family.r)
        if witness is not None:
            violations.append((idx, mode, witness))
    linear = H.is_linear() if family.linear_only else None
    return FreenessReport(violations, linear)


def verify_report(report) -> FreenessReport:
    """
    Checks a ``ConstructionReport`` against the family it was built for
    and stores the outcome in ``report.verified_free``.
    """
    r = report.parameters["r"]
    family = ForbiddenFamily.star_forest(
        report.spec, report.target_mode, r, linear_only=report.linear
    )
    outcome = verify_free(report.hypergraph, family)
    report.verified_free = outcome.free
    return outcome
