"""Automata, grammars and push-down automata, with their group-theoretic uses."""
from .automata import Dfa, Nfa, accepts, language_slice, nfa_to_dfa, words_up_to
from .matrices import BoolMatrixMonoid, bool_product, matrix_accepts, nfa_to_matrices
from .rational import (
    EMPTY_SET,
    EPSILON,
    Rational,
    concat,
    letter,
    nfa_to_rational,
    rational_to_nfa,
    star,
    union,
)
from .subgroups import finite_group_wp_dfa, rational_subgroup_generators
from .grammar import (
    Cfg,
    CykRecognizer,
    cyk,
    eliminate_epsilon,
    is_cnf,
    nullable_variables,
    pumping_constant,
    reduce_grammar,
    shortest_yields,
    to_cnf,
)
from .pda import BOTTOM, Pda, RunResult, Transition, Verdict, cfg_to_pda, fresh_bottom, is_deterministic, pda_run, pda_to_cfg
from .hotz import HotzPresentation, hotz_presentation
from .group_grammars import (
    build_vf_system,
    check_vf_tables,
    free_group_wp_grammar,
    normal_closure_grammar,
    vf_det_pda,
    vf_normal_form,
)
from .text_format import (
    format_automaton,
    format_grammar,
    format_pda,
    parse_automaton,
    parse_grammar,
    parse_pda,
)

__all__ = [
    "Dfa",
    "Nfa",
    "accepts",
    "language_slice",
    "nfa_to_dfa",
    "words_up_to",
    "BoolMatrixMonoid",
    "bool_product",
    "matrix_accepts",
    "nfa_to_matrices",
    "EMPTY_SET",
    "EPSILON",
    "Rational",
    "concat",
    "letter",
    "nfa_to_rational",
    "rational_to_nfa",
    "star",
    "union",
    "finite_group_wp_dfa",
    "rational_subgroup_generators",
    "Cfg",
    "CykRecognizer",
    "cyk",
    "eliminate_epsilon",
    "is_cnf",
    "nullable_variables",
    "pumping_constant",
    "reduce_grammar",
    "shortest_yields",
    "to_cnf",
    "BOTTOM",
    "fresh_bottom",
    "Pda",
    "RunResult",
    "Transition",
    "Verdict",
    "cfg_to_pda",
    "is_deterministic",
    "pda_run",
    "pda_to_cfg",
    "HotzPresentation",
    "hotz_presentation",
    "build_vf_system",
    "check_vf_tables",
    "free_group_wp_grammar",
    "normal_closure_grammar",
    "vf_det_pda",
    "vf_normal_form",
    "format_automaton",
    "format_grammar",
    "format_pda",
    "parse_automaton",
    "parse_grammar",
    "parse_pda",
]
