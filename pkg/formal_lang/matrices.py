"""Boolean matrix representation of an automaton's transition monoid."""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple

import numpy as np

from errors import InputError
from .automata import Nfa

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoolMatrixMonoid:
    """Per-letter Boolean n x n matrices; rows and columns follow `states`."""
    states: Tuple[str, ...]
    generators: Dict[str, np.ndarray]

    @property
    def dimension(self) -> int:
        return len(self.states)

    def identity(self) -> np.ndarray:
        return np.eye(self.dimension, dtype=bool)

    def matrix(self, word: Sequence[str]) -> np.ndarray:
        """M(w) = M(a1) ... M(an) in the Boolean semiring."""
        result = self.identity()
        for letter in word:
            try:
                m = self.generators[letter]
            except KeyError:
                raise InputError(f"letter {letter!r} has no matrix", {"letter": letter}) from None
            result = bool_product(result, m)
        return result

    def index(self, state: str) -> int:
        return self.states.index(state)


def bool_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.int64) @ b.astype(np.int64)) > 0


def nfa_to_matrices(nfa: Nfa) -> BoolMatrixMonoid:
    """M(a)[i, j] is True iff (q_i, a, q_j) is a transition."""
    index = {q: i for i, q in enumerate(nfa.states)}
    n = len(nfa.states)
    generators = {}
    for letter in nfa.alphabet:
        m = np.zeros((n, n), dtype=bool)
        for p, a, q in nfa.transitions:
            if a == letter:
                m[index[p], index[q]] = True
        m.setflags(write=False)
        generators[letter] = m
    return BoolMatrixMonoid(nfa.states, generators)


def matrix_accepts(
    monoid: BoolMatrixMonoid,
    initial: Iterable[str],
    final: Iterable[str],
    word: Sequence[str],
) -> bool:
    m = monoid.matrix(word)
    rows = [monoid.index(q) for q in initial]
    cols = [monoid.index(q) for q in final]
    if not rows or not cols:
        return False
    return bool(m[np.ix_(rows, cols)].any())
