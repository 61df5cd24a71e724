"""Group-flavoured automata: rational subgroup generators and finite-group word problems."""
import logging
from typing import Callable, Hashable, List, Sequence

from errors import InputError
from finite_groups import FiniteGroup, subgroup_closure
from rewrite import Word, inverse_letter, inverse_word
from .automata import Dfa, Nfa, words_up_to

logger = logging.getLogger(__name__)


def rational_subgroup_generators(
    nfa: Nfa,
    evaluate: Callable[[Word], Hashable],
    member: Callable[[Hashable], bool],
    inverse: Callable[[str], str] = inverse_letter,
) -> List[Word]:
    """
    Finite generating set of the subgroup H generated by the image of L(nfa).

    Returns the words u v u~ with |uv| <= number of states whose image lies
    in H, skipping those that evaluate to the identity. `evaluate` maps a
    word to a canonical group element and `member` decides membership in H.
    """
    sigma = nfa.alphabet
    missing = [a for a in sigma if inverse(a) not in sigma]
    if missing:
        raise InputError("input alphabet must be closed under inverses", {"missing": missing})
    n = len(nfa.states)
    identity = evaluate(())
    found = {}
    for uv in words_up_to(sigma, n):
        for cut in range(len(uv) + 1):
            u = uv[:cut]
            word = uv + inverse_word(u, inverse)
            if word in found:
                continue
            element = evaluate(word)
            if element != identity and member(element):
                found[word] = element
    logger.debug(f"{len(found)} subgroup generators from an automaton with {n} states")
    return sorted(found, key=lambda w: (len(w), w))


def finite_group_wp_dfa(group: FiniteGroup, generators: Sequence[str]) -> Dfa:
    """
    DFA over the generator names accepting exactly the words equal to 1.

    States are the group elements (by name); g --a--> g·a.

    Raises:
        InputError: if the generators do not generate the group.
    """
    gens = [group.element(name) for name in generators]
    if len(subgroup_closure(group, gens)) != group.order:
        raise InputError("generators do not generate the group", {"generators": list(generators)})
    transitions = [
        (group.name(g), name, group.name(group.mul(g, x)))
        for g in group.elements()
        for name, x in zip(generators, gens)
    ]
    return Dfa(
        tuple(group.names),
        tuple(generators),
        frozenset(transitions),
        frozenset(["1"]),
        frozenset(["1"]),
    )
