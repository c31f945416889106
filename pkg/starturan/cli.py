"""
Command line front end.

Exit codes: 0 on success (or pattern found), 1 when a pattern is decided
absent, 2 on usage or parse errors and infeasible parameters, 3 when an
exact search exceeds its budget.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Any, Dict, List, Optional, Sequence

from starturan import formulas
from starturan.hypergraph import (
    complete_uniform,
    lattice_hypergraph,
    load_hypergraph,
    save_hypergraph,
    to_text,
)
from starturan.lib.constructions import (
    WITNESS_FAMILIES,
    best_witness,
    regular_uniform,
)
from starturan.lib.oracles import default_oracle
from starturan.patterns import contains, expand, matching, star, star_forest
from starturan.search.exact import BudgetExceededError, default_budget, ex_exact
from starturan.search.family import ForbiddenFamily, verify_report
from starturan.search.local import ex_lower_local_search
from starturan.types import Graph, Mode, StarForestSpec
from starturan.utils import binom, format_fraction, jsonable, parallel_map

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_ABSENT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CONSTRUCT_TARGETS = sorted(WITNESS_FAMILIES) + ["lattice", "complete", "regular"]
FORMULA_TARGETS = [
    "llp",
    "erdos",
    "expansion",
    "linear",
    "berge-large-r",
    "berge-small-r",
    "berge",
    "clique-berge",
    "berge-star",
    "fixed-pair",
]


@dataclass
class RunConfig:
    """Validated command line settings."""

    command: str
    target: Optional[str] = None
    n: Optional[int] = None
    r: Optional[int] = None
    degrees: Optional[StarForestSpec] = None
    mode: Mode = Mode.EXPANSION
    linear: bool = False
    i: Optional[int] = None
    s: Optional[int] = None
    d: Optional[int] = None
    l: Optional[int] = None
    k: Optional[int] = None
    pattern: Optional[str] = None
    seed: Optional[int] = None
    budget: Optional[int] = None
    threads: int = 1
    iterations: int = 1000
    format: str = "json"
    input: Optional[str] = None
    output: Optional[str] = None
    verify: bool = False
    n_min: Optional[int] = None
    n_max: Optional[int] = None

    @staticmethod
    def from_args(args: argparse.Namespace) -> "RunConfig":
        values = dict(vars(args))
        degrees = values.pop("degrees", None)
        mode = values.pop("mode", None)
        cfg = RunConfig(
            **{k: v for k, v in values.items() if k in RunConfig.__dataclass_fields__}
        )
        if degrees is not None:
            cfg.degrees = StarForestSpec.from_string(degrees)
        if mode is not None:
            cfg.mode = Mode(mode)
        for name in ("n", "n_min", "n_max"):
            value = getattr(cfg, name)
            if value is not None and value < 0:
                raise ValueError(f"--{name.replace('_', '-')} must be non-negative")
        if cfg.r is not None and cfg.r < 2:
            raise ValueError("--r must be at least 2")
        return cfg

    def require(self, *names: str):
        missing = [n for n in names if getattr(self, n) is None]
        if missing:
            flags = ", ".join("--" + n.replace("_", "-") for n in missing)
            raise ValueError(f"{self.command} {self.target or ''} needs {flags}")

    def search_budget(self) -> int:
        return default_budget() if self.budget is None else self.budget


def _cell(value: Any) -> Any:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return format_fraction(value)
    return value


def _emit(payload: Dict[str, Any], cfg: RunConfig, out=None):
    out = out or sys.stdout
    if cfg.format == "json":
        out.write(json.dumps({"schema": SCHEMA_VERSION, **jsonable(payload)}, indent=2))
        out.write("\n")
    elif cfg.format == "csv":
        rows = payload.get("rows")
        if rows is None:
            rows = [
                {k: v for k, v in jsonable(payload).items() if not isinstance(v, (dict, list))}
            ]
        columns = payload.get("columns") or (list(rows[0]) if rows else [])
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({c: row.get(c, "") for c in columns})
        out.write(buffer.getvalue())
    else:
        for key, value in jsonable(payload).items():
            if isinstance(value, str) and "\n" in value:
                out.write(f"{key}:\n{value}")
            else:
                out.write(f"{key}: {value}\n")


def cmd_construct(cfg: RunConfig) -> int:
    """Builds a witness hypergraph and reports it."""
    target = cfg.target
    if target in WITNESS_FAMILIES:
        index_name = "s" if target == "berge-regular" else "i"
        cfg.require("n", "r", "degrees", index_name)
        build = WITNESS_FAMILIES[target]
        report = build(cfg.n, cfg.r, cfg.degrees, getattr(cfg, index_name))
        if cfg.verify:
            verify_report(report)
        H = report.hypergraph
        payload = report.to_dict()
    elif target == "lattice":
        cfg.require("r", "d")
        H, coloring = lattice_hypergraph(cfg.r, cfg.d)
        payload = {
            "family": "lattice",
            "parameters": {"r": cfg.r, "d": cfg.d},
            "num_vertices": H.n,
            "num_edges": H.m,
            "num_colors": coloring.num_colors,
            "linear": H.is_linear(),
            "regular": H.is_regular(cfg.d),
        }
    elif target == "complete":
        cfg.require("n", "r")
        H = complete_uniform(cfg.n, cfg.r)
        payload = {"family": "complete", "parameters": {"n": cfg.n, "r": cfg.r},
                   "num_vertices": H.n, "num_edges": H.m}
    elif target == "regular":
        cfg.require("n", "r", "d")
        H = regular_uniform(cfg.n, cfg.r, cfg.d)
        payload = {"family": "regular", "parameters": {"n": cfg.n, "r": cfg.r, "d": cfg.d},
                   "num_vertices": H.n, "num_edges": H.m}
    else:
        raise ValueError(f"unknown construction {target!r}")

    if cfg.output:
        save_hypergraph(H, cfg.output)
        payload["output"] = cfg.output
    else:
        payload["hypergraph"] = to_text(H)
    _emit(payload, cfg)
    return EXIT_OK


def parse_pattern(text: str) -> Graph:
    """Parses ``star:L``, ``forest:d1,d2,...`` or ``matching:k``."""
    kind, _, arg = text.partition(":")
    if not arg:
        raise ValueError(f"pattern {text!r} is not of the form kind:argument")
    try:
        if kind == "star":
            return star(int(arg))
        if kind == "matching":
            return matching(int(arg))
    except ValueError:
        raise ValueError(f"bad pattern argument in {text!r}") from None
    if kind == "forest":
        return star_forest(StarForestSpec.from_string(arg))
    raise ValueError(f"unknown pattern kind {kind!r}")


def cmd_detect(cfg: RunConfig) -> int:
    """Decides whether the hypergraph in ``--in`` contains a pattern."""
    cfg.require("input", "pattern")
    H = load_hypergraph(cfg.input)
    F = parse_pattern(cfg.pattern)
    r = cfg.r if cfg.r is not None else (H.uniformity() or 2)
    if cfg.mode == Mode.SUB:
        witness = contains(H, expand(F, r), Mode.SUB)
    else:
        witness = contains(H, F, cfg.mode, r)
    payload = {
        "pattern": cfg.pattern,
        "mode": cfg.mode.value,
        "found": witness is not None,
        "witness": witness.to_dict() if witness is not None else None,
    }
    _emit(payload, cfg)
    return EXIT_OK if witness is not None else EXIT_ABSENT


def _family(cfg: RunConfig) -> ForbiddenFamily:
    return ForbiddenFamily.star_forest(cfg.degrees, cfg.mode, cfg.r, cfg.linear)


def cmd_exact(cfg: RunConfig) -> int:
    """Computes an exact Turán number."""
    cfg.require("n", "r", "degrees")
    result = ex_exact(
        cfg.n,
        cfg.r,
        _family(cfg),
        budget=cfg.search_budget(),
        num_jobs=cfg.threads,
    )
    payload = result.to_dict()
    payload["mode"] = cfg.mode.value
    payload["degrees"] = str(cfg.degrees)
    payload["linear"] = cfg.linear
    if cfg.output:
        save_hypergraph(result.witness, cfg.output)
        payload["output"] = cfg.output
    _emit(payload, cfg)
    return EXIT_OK


def evaluate_formula(cfg: RunConfig) -> Dict[str, Any]:
    name = cfg.target
    if name == "llp":
        cfg.require("n", "degrees")
        return formulas.ex_llp(cfg.n, cfg.degrees).to_dict()
    if name == "erdos":
        cfg.require("n", "r", "k")
        value = formulas.ex_erdos_matching(cfg.n, cfg.r, cfg.k)
        return {"name": name, "value": format_fraction(value), "decimal": float(value)}
    if name == "berge-star":
        cfg.require("n", "r", "l")
        value = formulas.ex_berge_star(cfg.n, cfg.r, cfg.l)
        return {"name": name, "value": format_fraction(value), "decimal": float(value)}
    if name == "fixed-pair":
        cfg.require("n", "r")
        value = formulas.fixed_pair_count(cfg.n, cfg.r)
        return {"name": name, "value": format_fraction(value), "decimal": float(value)}
    cfg.require("n", "r", "degrees")
    if name == "expansion":
        return formulas.ex_expansion_rhs(
            cfg.n, cfg.r, cfg.degrees, default_oracle(cfg.r)
        ).to_dict()
    evaluators = {
        "linear": formulas.ex_linear_rhs,
        "berge-large-r": formulas.ex_berge_large_r_rhs,
        "berge-small-r": formulas.ex_berge_small_r_rhs,
        "berge": formulas.ex_berge_rhs,
        "clique-berge": formulas.ex_clique_berge_rhs,
    }
    if name not in evaluators:
        raise ValueError(f"unknown formula {name!r}")
    return evaluators[name](cfg.n, cfg.r, cfg.degrees).to_dict()


def cmd_formula(cfg: RunConfig) -> int:
    """Evaluates a closed-form bound."""
    _emit(evaluate_formula(cfg), cfg)
    return EXIT_OK


TABLE_WITNESSES = ["expansion", "linear", "berge-regular", "berge-block"]


def _expansion_column(r: int) -> str:
    # FixedPairOracle under-estimates the star term for r >= 3
    return "bound_expansion" if r == 2 else "expansion_rhs_fixed_pair"


def table_columns(cfg: RunConfig) -> List[str]:
    columns = ["n"]
    columns += [f"witness_{name}" for name in TABLE_WITNESSES]
    if cfg.r == 2:
        columns.append("bound_llp")
    columns += [_expansion_column(cfg.r), "bound_linear"]
    if cfg.degrees.k >= 2:
        columns.append("bound_berge")
    columns.append("exact")
    return columns


def table_row(cfg: RunConfig, n: int) -> Dict[str, Any]:
    """One row of the parameter sweep."""
    r, spec = cfg.r, cfg.degrees
    row: Dict[str, Any] = {"n": n}
    for name in TABLE_WITNESSES:
        report = best_witness(name, n, r, spec)
        row[f"witness_{name}"] = "" if report is None else report.num_edges
    if r == 2:
        row["bound_llp"] = _cell(formulas.ex_llp(n, spec).value)
    row[_expansion_column(r)] = _cell(
        formulas.ex_expansion_rhs(n, r, spec, default_oracle(r)).value
    )
    row["bound_linear"] = _cell(formulas.ex_linear_rhs(n, r, spec).value)
    if spec.k >= 2:
        try:
            row["bound_berge"] = _cell(formulas.ex_berge_rhs(n, r, spec).value)
        except ValueError:
            row["bound_berge"] = ""
    row["exact"] = ""
    if binom(n, r) <= cfg.search_budget():
        try:
            row["exact"] = ex_exact(n, r, _family(cfg), budget=cfg.search_budget()).value
        except BudgetExceededError:
            pass
    return row


def cmd_table(cfg: RunConfig) -> int:
    """Sweeps ``n`` over ``[n_min, n_max]``; rows are ordered by ``n``
    whatever the thread count."""
    cfg.require("n_min", "n_max", "r", "degrees")
    ns = list(range(cfg.n_min, cfg.n_max + 1))
    rows = parallel_map(partial(table_row, cfg), ns, num_jobs=cfg.threads)
    rows.sort(key=lambda row: row["n"])
    _emit({"columns": table_columns(cfg), "rows": rows}, cfg)
    return EXIT_OK


def cmd_local(cfg: RunConfig) -> int:
    """Randomized lower bound by local search."""
    cfg.require("n", "r", "degrees")
    H = ex_lower_local_search(cfg.n, cfg.r, _family(cfg), cfg.iterations, cfg.seed)
    payload = {"n": cfg.n, "r": cfg.r, "value": H.m, "seed": cfg.seed}
    if cfg.output:
        save_hypergraph(H, cfg.output)
        payload["output"] = cfg.output
    else:
        payload["hypergraph"] = to_text(H)
    _emit(payload, cfg)
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "detect": cmd_detect,
    "exact": cmd_exact,
    "formula": cmd_formula,
    "table": cmd_table,
    "local": cmd_local,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--degrees", help="non-increasing list such as 3,2,2")
    common.add_argument("--mode", choices=[m.value for m in Mode])
    common.add_argument("--linear", action="store_true")
    common.add_argument("--i", type=int)
    common.add_argument("--s", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--budget", type=int)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--out", dest="output")

    parser = argparse.ArgumentParser(
        prog="starturan", description="Turán numbers of star forests."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a witness")
    p.add_argument("target", choices=CONSTRUCT_TARGETS)
    p.add_argument("--d", type=int, help="lattice dimension or regularity")
    p.add_argument("--verify", action="store_true", help="run the deciders")

    p = sub.add_parser("detect", parents=[common], help="decide containment")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--pattern", required=True)
    p.set_defaults(mode=Mode.BERGE.value)

    sub.add_parser("exact", parents=[common], help="exact Turán number")

    p = sub.add_parser("formula", parents=[common], help="evaluate a bound")
    p.add_argument("target", choices=FORMULA_TARGETS)
    p.add_argument("--l", type=int, help="star size")
    p.add_argument("--k", type=int, help="matching size")

    p = sub.add_parser(
        "table",
        parents=[common],
        help="sweep n; for r >= 3 the expansion column uses the fixed-pair "
        "star term and is not an upper bound",
    )
    p.add_argument("--n-min", dest="n_min", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)

    p = sub.add_parser("local", parents=[common], help="local search bound")
    p.add_argument("--iterations", type=int, default=1000)
    return parser


def main(argv: Sequence[str] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[cfg.command](cfg)
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, TypeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
