"""Semi-Thue systems: one-step rewriting and normalization."""
import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from config import settings
from errors import InputError
from .alphabet import Alphabet, Word, format_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word

    @property
    def is_length_reducing(self) -> bool:
        return len(self.rhs) < len(self.lhs)

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} -> {format_word(self.rhs)}"


@dataclass(frozen=True)
class Rewrite:
    """One redex: position in the word, index of the rule, resulting word."""
    position: int
    rule_index: int
    result: Word


@dataclass(frozen=True)
class FuelExhausted:
    """The step budget ran out before an irreducible word was reached."""
    word: Word
    steps: int
    fuel: int


@dataclass(frozen=True)
class Trace:
    word: Word
    steps: int
    exhausted: bool


class SemiThueSystem:
    """
    Finite ordered list of rewrite rules over an alphabet.

    Rule order is the tie-break order of the deterministic strategy.
    Rules with an empty left-hand side are rejected.
    """

    def __init__(self, alphabet: Alphabet, rules: Sequence[Union[Rule, Tuple[Sequence[str], Sequence[str]]]]):
        self.alphabet = alphabet
        built: List[Rule] = []
        for index, rule in enumerate(rules):
            if not isinstance(rule, Rule):
                rule = Rule(tuple(rule[0]), tuple(rule[1]))
            if not rule.lhs:
                raise InputError(f"rule {index} has an empty left-hand side", {"rule": index})
            try:
                alphabet.check_word(rule.lhs)
                alphabet.check_word(rule.rhs)
            except InputError as e:
                raise InputError(f"rule {index} ({rule}): {e.message}", {"rule": index}) from e
            built.append(rule)
        self.rules: Tuple[Rule, ...] = tuple(built)
        by_first: Dict[str, List[int]] = {}
        for index, rule in enumerate(self.rules):
            by_first.setdefault(rule.lhs[0], []).append(index)
        self._by_first = {k: tuple(v) for k, v in by_first.items()}
        self.max_lhs = max((len(r.lhs) for r in self.rules), default=1)

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def rules_starting_with(self, letter: str) -> Tuple[int, ...]:
        return self._by_first.get(letter, ())

    def subsystem(self, keep) -> "SemiThueSystem":
        return SemiThueSystem(self.alphabet, [r for r in self.rules if keep(r)])

    def length_reducing_subsystem(self) -> "SemiThueSystem":
        return self.subsystem(lambda r: r.is_length_reducing)

    def __repr__(self) -> str:
        return f"SemiThueSystem({len(self.rules)} rules over {len(self.alphabet)} letters)"


def apply_once(system: SemiThueSystem, w: Sequence[str]) -> List[Rewrite]:
    """
    All one-step successors of w, ordered by (position, rule index).

    Raises:
        InputError: if w uses a letter outside the system's alphabet.
    """
    w = system.alphabet.check_word(w)
    return _successors(system, w)


def _successors(system: SemiThueSystem, w: Word) -> List[Rewrite]:
    found = []
    for pos in range(len(w)):
        for index in system.rules_starting_with(w[pos]):
            rule = system.rules[index]
            end = pos + len(rule.lhs)
            if w[pos:end] == rule.lhs:
                found.append(Rewrite(pos, index, w[:pos] + rule.rhs + w[end:]))
    return found


def _leftmost_redex(system: SemiThueSystem, w: Word, start: int) -> Optional[Tuple[int, Rule]]:
    for pos in range(start, len(w)):
        for index in system.rules_starting_with(w[pos]):
            rule = system.rules[index]
            if w[pos:pos + len(rule.lhs)] == rule.lhs:
                return pos, rule
    return None


def reduce_with_trace(
    system: SemiThueSystem,
    w: Sequence[str],
    fuel: Optional[int] = None,
    rng: Optional[random.Random] = None,
) -> Trace:
    """
    Rewrite w until irreducible or until `fuel` steps have been spent.

    Without `rng` the strategy is leftmost position, then lowest rule
    index. With `rng` each step picks a redex uniformly at random.
    """
    fuel = settings.REWRITE_FUEL if fuel is None else fuel
    w = system.alphabet.check_word(w)
    steps = 0
    if rng is not None:
        while True:
            successors = _successors(system, w)
            if not successors:
                return Trace(w, steps, False)
            if steps >= fuel:
                return Trace(w, steps, True)
            w = rng.choice(successors).result
            steps += 1
    start = 0
    while True:
        redex = _leftmost_redex(system, w, start)
        if redex is None:
            return Trace(w, steps, False)
        if steps >= fuel:
            logger.debug(f"fuel {fuel} exhausted at {format_word(w)}")
            return Trace(w, steps, True)
        pos, rule = redex
        w = w[:pos] + rule.rhs + w[pos + len(rule.lhs):]
        steps += 1
        # positions left of this window were irreducible and are unchanged
        start = max(0, pos - system.max_lhs + 1)


def normalize(
    system: SemiThueSystem,
    w: Sequence[str],
    fuel: Optional[int] = None,
    rng: Optional[random.Random] = None,
) -> Union[Word, FuelExhausted]:
    """
    Rewrite w to an irreducible word.

    Args:
        system: the rewriting system
        w: input word over the system's alphabet
        fuel: step budget, defaults to settings.REWRITE_FUEL
        rng: when given, a random redex is chosen at every step

    Returns:
        The irreducible word, or FuelExhausted when the budget is hit.
    """
    budget = settings.REWRITE_FUEL if fuel is None else fuel
    trace = reduce_with_trace(system, w, budget, rng)
    if trace.exhausted:
        return FuelExhausted(trace.word, trace.steps, budget)
    return trace.word


def descendants(system: SemiThueSystem, w: Sequence[str], depth: int) -> set:
    """Every word reachable from w in at most `depth` steps."""
    seen = {tuple(w)}
    frontier = [tuple(w)]
    for _ in range(depth):
        nxt = []
        for word in frontier:
            for rw in _successors(system, word):
                if rw.result not in seen:
                    seen.add(rw.result)
                    nxt.append(rw.result)
        frontier = nxt
    return seen
