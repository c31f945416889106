from .types import (
    Mode,
    Hypergraph,
    Graph,
    EdgeColoring,
    StarForestSpec,
    IncidenceView,
    StarTuranOracle,
)
from .hypergraph import (
    make_hypergraph,
    degree,
    is_linear,
    is_regular,
    disjoint_union,
    disjoint_union_all,
    cartesian_product,
    grid_lines,
    lattice_hypergraph,
    complete_uniform,
    clique_hypergraph,
    count_cliques,
    random_uniform_hypergraph,
    to_text,
    from_text,
    save_hypergraph,
    load_hypergraph,
)
from .patterns import (
    BergeWitness,
    ExpansionWitness,
    SubWitness,
    star,
    star_forest,
    matching,
    expand,
    contains,
    contains_sub,
    contains_berge,
    contains_expansion,
    skeleton_of,
    berge_star_at,
    adl_bound,
    verify_adl,
    greedy_embed_star_forest,
)
from .formulas import (
    BoundResult,
    ex_llp,
    ex_erdos_matching,
    ex_expansion_rhs,
    ex_linear_rhs,
    ex_berge_large_r_rhs,
    ex_berge_small_r_rhs,
    ex_berge_rhs,
    ex_clique_berge_rhs,
    ex_berge_star,
    is_large_r,
    fixed_pair_count,
)
from . import lib
from . import search
from .search import ForbiddenFamily, ex_exact, ex_exact_linear, ex_lower_local_search
from .utils import binom, format_fraction, parallel_map
