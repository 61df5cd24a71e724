"""Finite pregroups, their universal groups and the pregroup of a graph of groups."""
from .pregroup import (
    ONE,
    UNDEFINED,
    Pregroup,
    check_pregroup,
    free_pregroup,
    free_product_pregroup,
    group_pregroup,
)
from .rewriting import canonical_key, geodesic_reduce, length_reducing_system, sp_system, universal_wp, wp_grammar
from .streaming import StreamingReducer, inverse_witness_length
from .from_gog import GogPregroup, element_name, lemma_shape_in_carrier, pregroup_from_gog
from .text_format import format_pregroup, parse_pregroup

__all__ = [
    "ONE",
    "UNDEFINED",
    "Pregroup",
    "check_pregroup",
    "free_pregroup",
    "free_product_pregroup",
    "group_pregroup",
    "canonical_key",
    "geodesic_reduce",
    "length_reducing_system",
    "sp_system",
    "universal_wp",
    "wp_grammar",
    "StreamingReducer",
    "inverse_witness_length",
    "GogPregroup",
    "element_name",
    "lemma_shape_in_carrier",
    "pregroup_from_gog",
    "format_pregroup",
    "parse_pregroup",
]
