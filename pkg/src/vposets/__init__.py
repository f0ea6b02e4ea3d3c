"""Bivariate polynomials, recognition and enumeration for rooted trees and V-posets."""

from .errors import NotVPosetError, OracleBoundError, ParseError
from .polynomial import BivariatePoly, X, Y
from .trees import (
    CollisionReport,
    RootedTree,
    TreeAntichain,
    antichain_expansion_tree,
    collision_search,
    contract_root_edge,
    count_antichains_tree,
    count_cutsets_tree,
    count_maximal_antichains_tree,
    count_root_subtrees,
    delete_root_branch,
    enumerate_rooted_trees,
    maximal_antichains_tree,
    parse_tree,
    path,
    star,
    tree_poly,
    tree_poly_dc,
)
from .posets import (
    AddGreatest,
    AddLeast,
    BuildTrace,
    DisjointUnion,
    Empty,
    ForbiddenPattern,
    Poset,
    all_labeled_posets,
    antichain_expansion_poset,
    count_antichains_poset,
    count_cutsets_poset,
    count_maximal_antichains_no_basic,
    count_maximal_antichains_poset,
    decompose,
    element_status,
    find_forbidden,
    impossibility_search,
    is_v_poset,
    maximal_antichains_poset,
    maximal_chains,
    minimal_cutsets,
    parse_poset,
    poset_isomorphic,
    poset_poly,
    region_set,
    replay_trace,
    tree_to_poset,
)
from .enumeration import (
    AsymptoticResult,
    IntSeries,
    all_vposets,
    asymptotic_constant,
    asymptotic_estimate,
    census,
    connected_vposets,
    q_series,
    r_value,
    solve_rho,
    v_series,
    w_series,
    w_value,
)

__version__ = "0.1.0"
