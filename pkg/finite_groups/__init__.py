"""Finite groups, permutations and free actions."""
from .group import (
    FiniteGroup,
    check_group,
    cyclic,
    default_names,
    direct_product,
    element_order,
    is_homomorphism,
    left_cosets,
    relabel,
    subgroup_closure,
    symmetric,
    trivial_group,
)
from .permutation import (
    GroupAction,
    Permutation,
    compose,
    conjugator,
    free_action,
    permutation_closure,
)
from .text_format import format_group, parse_group

__all__ = [
    "FiniteGroup",
    "check_group",
    "cyclic",
    "default_names",
    "direct_product",
    "element_order",
    "is_homomorphism",
    "left_cosets",
    "relabel",
    "subgroup_closure",
    "symmetric",
    "trivial_group",
    "GroupAction",
    "Permutation",
    "compose",
    "conjugator",
    "free_action",
    "permutation_closure",
    "format_group",
    "parse_group",
]
