"""Grammars, rewriting systems and push-down automata for group word problems."""
import logging
from itertools import product
from typing import List, Optional, Sequence, Set, Tuple

from errors import InputError, VFTableError
from graph_of_groups.vf import IDENTITY, VFStructure
from rewrite import (
    Alphabet,
    SemiThueSystem,
    Word,
    check_local_confluence,
    format_word,
    free_reduce,
    inverse_letter,
)
from .grammar import Cfg
from .pda import Pda, Transition

logger = logging.getLogger(__name__)

AXIOM = "S"
PRIME = "'"


def free_group_wp_grammar(generators: Sequence[str]) -> Cfg:
    """S -> x S x~ S | _ for every generator x and every x~."""
    letters: List[str] = []
    for g in generators:
        letters += [g, inverse_letter(g)]
    productions = [(AXIOM, (x, AXIOM, inverse_letter(x), AXIOM)) for x in letters]
    productions.append((AXIOM, ()))
    return Cfg.build(productions, AXIOM, letters)


def normal_closure_grammar(letters: Sequence[str], relators: Sequence[Sequence[str]]) -> Cfg:
    """
    S -> a S a~ S | r | _ over an alphabet closed under formal inverses.

    Every generated word lies in the normal closure of the relators.
    """
    declared = set(letters)
    missing = sorted(inverse_letter(a) for a in letters if inverse_letter(a) not in declared)
    if missing:
        raise InputError("alphabet must be closed under formal inverses", {"missing": missing})
    for r in relators:
        foreign = [x for x in r if x not in declared]
        if foreign:
            raise InputError(f"relator {format_word(r)} uses undeclared letters", {"letters": foreign})
    productions = [(AXIOM, (a, AXIOM, inverse_letter(a), AXIOM)) for a in letters]
    productions += [(AXIOM, tuple(r)) for r in relators]
    productions.append((AXIOM, ()))
    return Cfg.build(productions, AXIOM, letters)


def build_vf_system(vf: VFStructure) -> SemiThueSystem:
    """Rules a b -> w(a, b) r(a, b) over Delta; rules that change nothing are left out."""
    rules = []
    for a, b in product(vf.delta, vf.delta):
        word, rep = vf.entry(a, b)
        rhs = word + ((rep,) if rep != IDENTITY else ())
        if rhs != (a, b):
            rules.append(((a, b), rhs))
    return SemiThueSystem(Alphabet(vf.delta), rules)


def check_vf_tables(vf: VFStructure, fuel: Optional[int] = None) -> SemiThueSystem:
    """
    Build the system and require local confluence.

    Joinability of every overlap a b c is exactly the associativity of
    the tables on that triple.

    Raises:
        VFTableError: naming the first triple whose two reductions differ.
    """
    system = build_vf_system(vf)
    verdict = check_local_confluence(system, fuel)
    if not verdict.ok:
        peak = verdict.peak or ()
        raise VFTableError(
            f"tables are inconsistent on {format_word(peak)}: {verdict.describe()}",
            {"triple": list(peak), "left": list(verdict.left or ()), "right": list(verdict.right or ())},
        )
    logger.info(f"✅ VF tables consistent ({verdict.pairs_checked} overlaps checked)")
    return system


def _primed(letter: str) -> str:
    return letter + PRIME


def _unprime(letter: str) -> str:
    return letter[: -len(PRIME)] if letter.endswith(PRIME) else letter


def _prime_bottom(word: Word) -> Word:
    return (_primed(word[0]),) + word[1:] if word else ()


def _reduced_words(letters: Sequence[str], length: int) -> List[Word]:
    words: List[Word] = [()]
    for _ in range(length):
        words = [w + (x,) for w in words for x in letters if not w or w[-1] != inverse_letter(x)]
    return words


def vf_det_pda(vf: VFStructure) -> Pda:
    """
    Deterministic push-down automaton for the word problem.

    States are R and a primed copy R'; a primed state means an empty
    stack. The stack holds a freely reduced word u over the free letters
    whose bottom letter is primed; in state r the configuration stands
    for u r. Reading a replaces r a by w(r, a) s and frees the top of
    the stack of at most m = max |w(r, a)| cancellations:
      - r' a: push w(r, a) with its first letter primed, go to s (or s'
        when w(r, a) is empty);
      - r a with m unprimed letters x on top: replace x by the free
        reduction of x w(r, a);
      - r a with the whole stack x (bottom primed, |x| <= m): replace x
        by the free reduction of x w(r, a), re-priming the new bottom or
        going to s' when it cancels completely.
    Accepts with an empty stack in 1'.
    """
    free = vf.free_letters
    m = vf.window
    reps = vf.representatives
    transitions: List[Transition] = []
    for r, a in product(reps, vf.delta):
        w, s = vf.times_letter(r, a)
        if w:
            transitions.append(Transition((), _primed(r), (a,), _prime_bottom(w), s))
        else:
            transitions.append(Transition((), _primed(r), (a,), (), _primed(s)))
        for x in _reduced_words(free, m):
            y = free_reduce(x + w)
            transitions.append(Transition(x, r, (a,), y, s))
        for length in range(1, m + 1):
            for x in _reduced_words(free, length):
                y = free_reduce(x + w)
                if y:
                    transitions.append(Transition(_prime_bottom(x), r, (a,), _prime_bottom(y), s))
                else:
                    transitions.append(Transition(_prime_bottom(x), r, (a,), (), _primed(s)))
    states = tuple(reps) + tuple(_primed(r) for r in reps)
    stack = tuple(free) + tuple(_primed(x) for x in free)
    logger.debug(f"vf_det_pda: {len(transitions)} transitions, window {m}")
    return Pda(
        states,
        vf.delta,
        stack,
        tuple(transitions),
        _primed(IDENTITY),
        frozenset([_primed(IDENTITY)]),
    )


def vf_normal_form(vf: VFStructure, word: Sequence[str]) -> Tuple[Word, str]:
    """Left-to-right evaluation to (freely reduced u, r) with word = u r."""
    u: Word = ()
    r = IDENTITY
    delta: Set[str] = set(vf.delta)
    for position, a in enumerate(word):
        if a not in delta:
            raise InputError(f"letter {a!r} at position {position} is not in Delta", {"letter": a})
        w, r = vf.times_letter(r, a)
        u = free_reduce(u + w)
    return u, r
