"""Small automata and grammars used as language fixtures."""
from typing import Callable, Dict

from formal_lang import Cfg, Nfa, free_group_wp_grammar


def matrix_example() -> Nfa:
    """
    Three states over {a, b}; M(a) = 010/101/100 and M(b) = 100/100/100.

    Accepts w iff the (1, 3) entry of M(w) is set.
    """
    return Nfa.build(
        states=["1", "2", "3"],
        alphabet=["a", "b"],
        transitions=[
            ("1", "a", "2"),
            ("2", "a", "1"),
            ("2", "a", "3"),
            ("3", "a", "1"),
            ("1", "b", "1"),
            ("2", "b", "1"),
            ("3", "b", "1"),
        ],
        initial=["1"],
        final=["3"],
    )


def even_a() -> Nfa:
    """Words over {a, b} with an even number of a."""
    return Nfa.build(
        states=["0", "1"],
        alphabet=["a", "b"],
        transitions=[("0", "a", "1"), ("1", "a", "0"), ("0", "b", "0"), ("1", "b", "1")],
        initial=["0"],
        final=["0"],
    )


def ends_with_ab() -> Nfa:
    """Nondeterministic guess of the final 'a b'."""
    return Nfa.build(
        states=["s", "p", "f"],
        alphabet=["a", "b"],
        transitions=[("s", "a", "s"), ("s", "b", "s"), ("s", "a", "p"), ("p", "b", "f")],
        initial=["s"],
        final=["f"],
    )


def no_double_b() -> Nfa:
    """Words without the factor 'b b'; two initial states."""
    return Nfa.build(
        states=["x", "y", "z", "dead"],
        alphabet=["a", "b"],
        transitions=[
            ("x", "a", "x"),
            ("x", "b", "y"),
            ("y", "a", "x"),
            ("y", "b", "dead"),
            ("z", "a", "x"),
            ("dead", "a", "dead"),
            ("dead", "b", "dead"),
        ],
        initial=["x", "z"],
        final=["x", "y", "z"],
    )


def anbn() -> Cfg:
    """S -> a S b | _"""
    return Cfg.build([("S", ("a", "S", "b")), ("S", ())], "S")


def balanced() -> Cfg:
    """Dyck words over one bracket pair: S -> S S | ( S ) | _"""
    return Cfg.build([("S", ("S", "S")), ("S", ("(", "S", ")")), ("S", ())], "S")


def free_group_wp() -> Cfg:
    return free_group_wp_grammar(["a", "b"])


AUTOMATA: Dict[str, Callable[[], Nfa]] = {
    "matrix_example": matrix_example,
    "even_a": even_a,
    "ends_with_ab": ends_with_ab,
    "no_double_b": no_double_b,
}

GRAMMARS: Dict[str, Callable[[], Cfg]] = {
    "anbn": anbn,
    "balanced": balanced,
    "free_group_wp": free_group_wp,
}
