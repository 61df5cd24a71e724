"""
Push-down automata accepting by empty stack and final state.

A configuration is (stack, state, remaining input) with the stack top at
the right end. A transition pops a stack suffix, reads an input prefix,
pushes a word and changes state.
"""
import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from config import settings
from errors import InputError
from rewrite import Word
from .grammar import Cfg, eliminate_epsilon, reduce_grammar

logger = logging.getLogger(__name__)

BOTTOM = "#"


def fresh_bottom(stack_alphabet: Sequence[str]) -> str:
    """BOTTOM, lengthened until it is not already a stack symbol."""
    marker = BOTTOM
    while marker in stack_alphabet:
        marker += BOTTOM
    return marker


@dataclass(frozen=True)
class Transition:
    pop: Word
    source: str
    read: Word
    push: Word
    target: str


@dataclass(frozen=True)
class Pda:
    states: Tuple[str, ...]
    input_alphabet: Tuple[str, ...]
    stack_alphabet: Tuple[str, ...]
    transitions: Tuple[Transition, ...]
    initial: str
    final: frozenset

    def __post_init__(self):
        states, sigma, gamma = set(self.states), set(self.input_alphabet), set(self.stack_alphabet)
        if self.initial not in states or not set(self.final) <= states:
            raise InputError("initial/final states must be declared")
        for t in self.transitions:
            if t.source not in states or t.target not in states:
                raise InputError(f"transition {t} uses an undeclared state")
            if not set(t.read) <= sigma:
                raise InputError(f"transition {t} reads an undeclared letter")
            if not (set(t.pop) | set(t.push)) <= gamma:
                raise InputError(f"transition {t} uses an undeclared stack symbol")

    def from_state(self, state: str) -> List[Transition]:
        return [t for t in self.transitions if t.source == state]


class Verdict(str, Enum):
    ACCEPT = "Accept"
    REJECT = "Reject"
    FUEL_EXHAUSTED = "FuelExhausted"


@dataclass(frozen=True)
class RunResult:
    verdict: Verdict
    configurations: int
    max_branching: int
    pruned: bool

    @property
    def accepted(self) -> bool:
        return self.verdict == Verdict.ACCEPT


def _successors(by_state: Dict[str, List[Transition]], stack: Word, state: str, word: Word, pos: int):
    for t in by_state.get(state, ()):
        k = len(t.pop)
        if k and stack[-k:] != t.pop:
            continue
        r = len(t.read)
        if word[pos:pos + r] != t.read:
            continue
        yield stack[: len(stack) - k] + t.push, t.target, pos + r


def pda_run(m: Pda, word: Sequence[str], fuel: Optional[int] = None) -> RunResult:
    """
    Breadth-first search over configurations, visited set on
    (stack, state, position).

    Configurations whose stack rises above a horizon (PDA_STACK_SLACK plus
    |w| times the largest net growth of a transition) are deferred, not
    dropped: once the queue runs dry the horizon doubles and the deferred
    configurations resume. Only fuel ends a search that keeps deferring,
    so `Reject` always means no accepting run exists. `pruned` records
    whether the horizon ever had to grow.
    """
    fuel = settings.PDA_FUEL if fuel is None else fuel
    word = tuple(word)
    for a in word:
        if a not in m.input_alphabet:
            raise InputError(f"letter {a!r} is not in the input alphabet", {"letter": a})
    growth = max((len(t.push) - len(t.pop) for t in m.transitions), default=0)
    horizon = settings.PDA_STACK_SLACK + len(word) * max(1, growth)
    by_state: Dict[str, List[Transition]] = {}
    for t in m.transitions:
        by_state.setdefault(t.source, []).append(t)

    start = ((), m.initial, 0)
    seen = {start}
    queue = deque([start])
    deferred: List[Tuple[Word, str, int]] = []
    branching = 0
    pruned = False
    while True:
        while queue:
            if len(seen) > fuel:
                logger.warning(f"PDA search stopped after {fuel} configurations")
                return RunResult(Verdict.FUEL_EXHAUSTED, len(seen), branching, pruned)
            stack, state, pos = queue.popleft()
            if not stack and state in m.final and pos == len(word):
                return RunResult(Verdict.ACCEPT, len(seen), branching, pruned)
            count = 0
            for config in _successors(by_state, stack, state, word, pos):
                count += 1
                if config in seen:
                    continue
                seen.add(config)
                if len(config[0]) > horizon:
                    deferred.append(config)
                else:
                    queue.append(config)
            branching = max(branching, count)
        if not deferred:
            return RunResult(Verdict.REJECT, len(seen), branching, pruned)
        pruned = True
        horizon *= 2
        logger.debug(f"PDA stack horizon raised to {horizon}")
        queue.extend(c for c in deferred if len(c[0]) <= horizon)
        deferred = [c for c in deferred if len(c[0]) > horizon]


def is_deterministic(m: Pda) -> bool:
    """
    True iff no configuration enables two transitions: for distinct
    transitions from one state, neither pop is a suffix of the other or
    neither read is a prefix of the other.
    """
    for state in m.states:
        ts = m.from_state(state)
        for i, t in enumerate(ts):
            for u in ts[i + 1:]:
                short_pop, long_pop = sorted((t.pop, u.pop), key=len)
                pops_overlap = long_pop[len(long_pop) - len(short_pop):] == short_pop
                short_read, long_read = sorted((t.read, u.read), key=len)
                reads_overlap = long_read[: len(short_read)] == short_read
                if pops_overlap and reads_overlap:
                    return False
    return True


def cfg_to_pda(g: Cfg) -> Pda:
    """
    Two-state shift/reduce automaton.

    The grammar is first made free of empty productions (apart from the
    fresh axiom), then: q0 b -> b q0 for each terminal, alpha q0 -> A q0
    for each production A -> alpha, and S q0 -> q1. The axiom's empty
    production becomes a plain move q0 -> q1, so every stack stays within
    |w| + 1 symbols.
    """
    h = eliminate_epsilon(g)
    transitions = [Transition((h.axiom,), "q0", (), (), "q1")]
    for lhs, rhs in h.productions:
        if rhs:
            transitions.append(Transition(rhs, "q0", (), (lhs,), "q0"))
        else:
            transitions.append(Transition((), "q0", (), (), "q1"))
    transitions += [Transition((), "q0", (b,), (b,), "q0") for b in h.terminals]
    return Pda(
        ("q0", "q1"),
        h.terminals,
        h.variables + h.terminals,
        tuple(transitions),
        "q0",
        frozenset(["q1"]),
    )


def _normalize_for_grammar(m: Pda) -> Pda:
    """
    Add a bottom marker, then rewrite every transition to pop exactly
    one symbol and push at most two.
    """
    used = set(m.states)
    fresh_counter = [0]

    def fresh() -> str:
        while True:
            fresh_counter[0] += 1
            name = f"t{fresh_counter[0]}"
            if name not in used:
                used.add(name)
                return name

    bottom = fresh_bottom(m.stack_alphabet)
    gamma = m.stack_alphabet + (bottom,)

    base: List[Transition] = []
    for t in m.transitions:
        if t.pop:
            base.append(t)
        else:
            base.extend(Transition((z,), t.source, t.read, (z,) + t.push, t.target) for z in gamma)
    base.extend(Transition((bottom,), f, (), (), f) for f in sorted(m.final))

    out: List[Transition] = []
    for t in base:
        if len(t.pop) == 1 and len(t.push) <= 2:
            out.append(t)
            continue
        pops = list(reversed(t.pop))  # top first
        current = t.source
        for i, z in enumerate(pops):
            last = i == len(pops) - 1
            read = t.read if i == 0 else ()
            if not last:
                nxt = fresh()
                out.append(Transition((z,), current, read, (), nxt))
                current = nxt
                continue
            head, rest = t.push[:2], t.push[2:]
            nxt = t.target if not rest else fresh()
            out.append(Transition((z,), current, read, head, nxt))
            current = nxt
            for j, x in enumerate(rest):
                nxt = t.target if j == len(rest) - 1 else fresh()
                out.extend(Transition((y,), current, (), (y, x), nxt) for y in gamma)
                current = nxt
    states = tuple(m.states) + tuple(sorted(used - set(m.states)))
    return Pda(states, m.input_alphabet, gamma, tuple(out), m.initial, m.final)


def pda_to_cfg(m: Pda) -> Cfg:
    """
    Triple construction: variables (p, z, q) derive what can be read from
    state p while the stack top z is consumed, ending in q.
    """
    normal = _normalize_for_grammar(m)
    q0 = m.initial
    states = normal.states

    def var(p: str, z: str, q: str) -> str:
        return f"({p},{z},{q})"

    prods: List[Tuple[str, Word]] = [("S", (var(q0, fresh_bottom(m.stack_alphabet), f),)) for f in sorted(m.final)]
    for t in normal.transitions:
        (z,) = t.pop
        p, u = t.source, t.read
        if not t.push:
            prods.append((var(p, z, t.target), u))
        elif len(t.push) == 1:
            (y,) = t.push
            for q in states:
                prods.append((var(p, z, q), u + (var(t.target, y, q),)))
        else:
            x, y = t.push  # y on top
            for q, s in product(states, states):
                prods.append((var(p, z, q), u + (var(t.target, y, s), var(s, x, q))))
    variables = ["S"] + [var(p, z, q) for p in states for z in normal.stack_alphabet for q in states]
    terminals = m.input_alphabet
    clash = set(variables) & set(terminals)
    if clash:
        raise InputError("input letters clash with grammar variable names", {"symbols": sorted(clash)})
    g = Cfg(tuple(variables), tuple(terminals), tuple(dict.fromkeys(prods)), "S")
    reduced = reduce_grammar(g)
    logger.debug(f"pda_to_cfg: {len(prods)} productions, {len(reduced.productions)} after reduction")
    return reduced


