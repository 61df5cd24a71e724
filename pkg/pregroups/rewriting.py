"""The rewriting system S_P, geodesic reduction and the word problem of U(P)."""
import logging
from collections import deque
from functools import lru_cache
from typing import List, Sequence, Set, Tuple

from errors import ConstructionError
from formal_lang import Cfg
from rewrite import FuelExhausted, SemiThueSystem, Word, normalize
from .pregroup import ONE, Pregroup

logger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def sp_system(p: Pregroup) -> SemiThueSystem:
    """
    S_P over the carrier:
      1 -> empty,
      a b -> [ab] for (a, b) in D,
      a b -> [ac] [c~b] for (a, c), (c~, b) in D and c != 1.
    Rules with a or b equal to 1 are covered by the first family; rules
    that rewrite a word to itself are left out.
    """
    rules: List[Tuple[Word, Word]] = [((ONE,), ())]
    names = p.carrier
    n = p.size
    for a in range(1, n):
        for b in range(1, n):
            ab = p.mul(a, b)
            if ab is not None:
                rules.append(((names[a], names[b]), (names[ab],)))
    for a in range(1, n):
        for b in range(1, n):
            for c in range(1, n):
                ac = p.mul(a, c)
                cb = p.mul(p.inv(c), b)
                if ac is None or cb is None:
                    continue
                lhs, rhs = (names[a], names[b]), (names[ac], names[cb])
                if rhs != lhs:
                    rules.append((lhs, rhs))
    system = SemiThueSystem(p.alphabet, rules)
    logger.debug(f"S_P: {len(system)} rules, {len(system.length_reducing_subsystem())} length-reducing")
    return system


@lru_cache(maxsize=32)
def length_reducing_system(p: Pregroup) -> SemiThueSystem:
    return sp_system(p).length_reducing_subsystem()


def geodesic_reduce(p: Pregroup, word: Sequence[str]) -> Word:
    """Apply only length-reducing rules, leftmost first, until none applies."""
    result = normalize(length_reducing_system(p), tuple(word))
    if isinstance(result, FuelExhausted):
        raise ConstructionError("length-reducing rules ran out of fuel", {"word": list(word)})
    return result


def universal_wp(p: Pregroup, word: Sequence[str]) -> bool:
    """Whether the word is 1 in U(P)."""
    return geodesic_reduce(p, word) == ()


def _symmetric_neighbours(p: Pregroup, word: Word) -> List[Word]:
    out = []
    for pos in range(len(word) - 1):
        a, b = p.index(word[pos]), p.index(word[pos + 1])
        for c in range(1, p.size):
            ac = p.mul(a, c)
            cb = p.mul(p.inv(c), b)
            if ac is None or cb is None or ac == 0 or cb == 0:
                continue
            moved = word[:pos] + (p.name(ac), p.name(cb)) + word[pos + 2:]
            if moved != word:
                out.append(moved)
    return out


def canonical_key(p: Pregroup, word: Sequence[str]) -> Word:
    """
    A unique representative of the element of U(P).

    The geodesic is closed under the length-preserving rules of S_P and
    the least word in carrier order is returned.
    """
    geodesic = geodesic_reduce(p, word)
    seen: Set[Word] = {geodesic}
    queue = deque([geodesic])
    while queue:
        current = queue.popleft()
        for nxt in _symmetric_neighbours(p, current):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return min(seen, key=lambda w: [p.index(x) for x in w])


def _variable(name: str) -> str:
    return f"[{name}]"


def wp_grammar(p: Pregroup) -> Cfg:
    """
    Grammar with a variable [x] for every carrier element and axiom [1]:
    [1] -> empty, [ab] -> [a] [b] for (a, b) in D, and [x] -> x.
    """
    names = p.carrier
    productions: List[Tuple[str, Word]] = [(_variable(ONE), ())]
    for a, b in p.domain():
        productions.append((_variable(names[p.mul(a, b)]), (_variable(names[a]), _variable(names[b]))))
    productions += [(_variable(x), (x,)) for x in names]
    return Cfg.build(productions, _variable(ONE), names)
