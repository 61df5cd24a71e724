"""Cayley balls, tree decompositions, chordality and treewidth."""
from .oracles import FiniteGroupOracle, FreeGroupOracle, GogOracle, GroupOracle, PregroupOracle
from .ball import cayley_ball, interior, sphere
from .decomposition import (
    TdReport,
    TreeDecomposition,
    adjacent_bags_intersect,
    maximal_cliques_covered,
    neighborhood_td,
    neighbourhood,
    neighbourhood_bound,
    normalize_td,
    path_decomposition,
    single_bag,
    validate_td,
)
from .chordal import clique_tree, extend_generators_for_chordality, is_chordal, perfect_elimination_ordering
from .muller_schupp import MullerSchuppResult, grammar_constant, muller_schupp_td
from .treewidth import complete_graph, grid_graph, treewidth_exact, treewidth_upper_bound
from .text_format import format_graph, format_td, graph_to_dot, parse_graph, parse_td, td_to_dot

__all__ = [
    "FiniteGroupOracle",
    "FreeGroupOracle",
    "GogOracle",
    "GroupOracle",
    "PregroupOracle",
    "cayley_ball",
    "interior",
    "sphere",
    "TdReport",
    "TreeDecomposition",
    "adjacent_bags_intersect",
    "maximal_cliques_covered",
    "neighborhood_td",
    "neighbourhood",
    "neighbourhood_bound",
    "normalize_td",
    "path_decomposition",
    "single_bag",
    "validate_td",
    "clique_tree",
    "extend_generators_for_chordality",
    "is_chordal",
    "perfect_elimination_ordering",
    "MullerSchuppResult",
    "grammar_constant",
    "muller_schupp_td",
    "complete_graph",
    "grid_graph",
    "treewidth_exact",
    "treewidth_upper_bound",
    "format_graph",
    "format_td",
    "graph_to_dot",
    "parse_graph",
    "parse_td",
    "td_to_dot",
]
