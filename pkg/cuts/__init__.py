"""Cuts, optimal nested cuts, structure trees and blocks on finite balls."""
from .cut import Cut, corners, cut_from_side, edge_boundary, enumerate_kcuts, is_cut_side, is_nested
from .paths import PathWindow, PeriodicPath, default_periods, has_infinite_order, path_family, periodic_window
from .optimal import OptimalCuts, cuts_splitting_path, m_value, minimal_cuts, optimal_cuts
from .structure import (
    Block,
    StructureTree,
    block,
    blocks,
    blocks_tree_decomposition,
    choose_lambda,
    structure_tree,
    tilde_classes,
    tilde_relation,
    validate_blocks,
)
from .pipeline import CutsPipeline
from .text_format import cut_to_dot, structure_tree_to_dot

__all__ = [
    "Cut",
    "corners",
    "cut_from_side",
    "edge_boundary",
    "enumerate_kcuts",
    "is_cut_side",
    "is_nested",
    "PathWindow",
    "PeriodicPath",
    "default_periods",
    "has_infinite_order",
    "path_family",
    "periodic_window",
    "OptimalCuts",
    "cuts_splitting_path",
    "m_value",
    "minimal_cuts",
    "optimal_cuts",
    "Block",
    "StructureTree",
    "block",
    "blocks",
    "blocks_tree_decomposition",
    "choose_lambda",
    "structure_tree",
    "tilde_classes",
    "tilde_relation",
    "validate_blocks",
    "CutsPipeline",
    "cut_to_dot",
    "structure_tree_to_dot",
]
