"""Finite automata and the subset construction."""
import itertools
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from errors import InputError
from rewrite import Word

logger = logging.getLogger(__name__)

Transition = Tuple[str, str, str]


@dataclass(frozen=True)
class Nfa:
    """(Q, Sigma, delta, I, F) with delta a set of (state, letter, state)."""
    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    transitions: FrozenSet[Transition]
    initial: FrozenSet[str]
    final: FrozenSet[str]

    def __post_init__(self):
        states = set(self.states)
        letters = set(self.alphabet)
        if len(states) != len(self.states):
            raise InputError("duplicate state names", {"states": list(self.states)})
        for p, a, q in self.transitions:
            if p not in states or q not in states:
                raise InputError(f"transition ({p}, {a}, {q}) uses an undeclared state", {"transition": [p, a, q]})
            if a not in letters:
                raise InputError(f"transition ({p}, {a}, {q}) uses an undeclared letter", {"transition": [p, a, q]})
        for q in self.initial | self.final:
            if q not in states:
                raise InputError(f"undeclared state {q!r}", {"state": q})

    @classmethod
    def build(
        cls,
        states: Iterable[str],
        alphabet: Iterable[str],
        transitions: Iterable[Transition],
        initial: Iterable[str],
        final: Iterable[str],
    ) -> "Nfa":
        return cls(tuple(states), tuple(alphabet), frozenset(transitions), frozenset(initial), frozenset(final))

    def step(self, current: FrozenSet[str], letter: str) -> FrozenSet[str]:
        return frozenset(q for p, a, q in self.transitions if a == letter and p in current)

    def delta(self) -> Dict[Tuple[str, str], List[str]]:
        table: Dict[Tuple[str, str], List[str]] = {}
        for p, a, q in sorted(self.transitions):
            table.setdefault((p, a), []).append(q)
        return table

    @property
    def is_deterministic(self) -> bool:
        return len(self.initial) <= 1 and all(len(v) <= 1 for v in self.delta().values())


class Dfa(Nfa):
    """An Nfa with at most one initial state and one transition per (state, letter)."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_deterministic:
            raise InputError("automaton is not deterministic")


def accepts(automaton: Nfa, word: Sequence[str]) -> bool:
    current = automaton.initial
    for letter in word:
        if letter not in automaton.alphabet:
            raise InputError(f"letter {letter!r} is not in the input alphabet", {"letter": letter})
        current = automaton.step(current, letter)
        if not current:
            return False
    return bool(current & automaton.final)


def subset_name(subset: FrozenSet[str], order: Dict[str, int]) -> str:
    return "{" + ",".join(sorted(subset, key=order.__getitem__)) + "}"


def nfa_to_dfa(nfa: Nfa) -> Dfa:
    """Subset construction over the reachable subsets, visited breadth first."""
    order = {q: i for i, q in enumerate(nfa.states)}
    start = nfa.initial
    names = {start: subset_name(start, order)}
    transitions = []
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        for letter in nfa.alphabet:
            target = nfa.step(subset, letter)
            if target not in names:
                names[target] = subset_name(target, order)
                queue.append(target)
            transitions.append((names[subset], letter, names[target]))
    final = [names[s] for s in names if s & nfa.final]
    logger.debug(f"subset construction: {len(nfa.states)} states -> {len(names)} states")
    return Dfa(
        tuple(names.values()),
        nfa.alphabet,
        frozenset(transitions),
        frozenset([names[start]]),
        frozenset(final),
    )


def words_up_to(alphabet: Sequence[str], n: int) -> Iterator[Word]:
    """All words of length <= n, by length, then in alphabet order."""
    for length in range(n + 1):
        yield from itertools.product(alphabet, repeat=length)


def language_slice(automaton: Nfa, n: int) -> FrozenSet[Word]:
    return frozenset(w for w in words_up_to(automaton.alphabet, n) if accepts(automaton, w))
