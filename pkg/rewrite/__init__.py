"""Semi-Thue rewriting engine."""
from .alphabet import (
    Alphabet,
    EMPTY,
    Word,
    format_word,
    free_reduce,
    inverse_letter,
    inverse_word,
    parse_word,
)
from .system import (
    FuelExhausted,
    Rewrite,
    Rule,
    SemiThueSystem,
    apply_once,
    descendants,
    normalize,
    reduce_with_trace,
)
from .confluence import (
    ConfluenceVerdict,
    CriticalPair,
    Equivalence,
    Verdict,
    check_local_confluence,
    check_strong_confluence,
    critical_pairs,
    equivalent,
    is_length_reducing,
    joinable_bfs,
)
from .builtin import dyck_system, free_group_system
from .text_format import format_system, parse_system

__all__ = [
    "Alphabet",
    "EMPTY",
    "Word",
    "format_word",
    "free_reduce",
    "inverse_letter",
    "inverse_word",
    "parse_word",
    "FuelExhausted",
    "Rewrite",
    "Rule",
    "SemiThueSystem",
    "apply_once",
    "descendants",
    "normalize",
    "reduce_with_trace",
    "ConfluenceVerdict",
    "CriticalPair",
    "Equivalence",
    "Verdict",
    "check_local_confluence",
    "check_strong_confluence",
    "critical_pairs",
    "equivalent",
    "is_length_reducing",
    "joinable_bfs",
    "dyck_system",
    "free_group_system",
    "format_system",
    "parse_system",
]
