"""Graphs of finite groups: normal forms, Britton reduction, Bass-Serre trees and free subgroups."""
from .group import (
    EDGE,
    IDENTITY,
    VERTEX,
    Edge,
    EdgeSpec,
    GogLetter,
    GraphOfGroups,
    Presentation,
)
from .bst import BstNode, bst_ball, bst_children, bst_root
from .sym import FreeSubgroupData, SymHomomorphism, free_subgroup_data, sym_homomorphism
from .builders import amalgam, free_gog, hnn
from .vf import VFEntry, VFStructure, infinite_dihedral_vf
from .text_format import (
    format_gog,
    format_group_spec,
    format_vf,
    parse_gog,
    parse_group_spec,
    parse_vf,
)

__all__ = [
    "EDGE",
    "IDENTITY",
    "VERTEX",
    "Edge",
    "EdgeSpec",
    "GogLetter",
    "GraphOfGroups",
    "Presentation",
    "BstNode",
    "bst_ball",
    "bst_children",
    "bst_root",
    "FreeSubgroupData",
    "SymHomomorphism",
    "free_subgroup_data",
    "sym_homomorphism",
    "amalgam",
    "free_gog",
    "hnn",
    "VFEntry",
    "VFStructure",
    "infinite_dihedral_vf",
    "format_gog",
    "format_group_spec",
    "format_vf",
    "parse_gog",
    "parse_group_spec",
    "parse_vf",
]
