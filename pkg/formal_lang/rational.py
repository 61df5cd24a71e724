"""
Rational expressions and the two Kleene conversions.

Expressions are immutable trees built through `union`, `concat` and
`star`, which apply only the identities involving the empty set and the
empty word.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Set, Tuple

from .automata import Nfa

logger = logging.getLogger(__name__)


class Rational:
    """Base class of rational expression nodes."""

    precedence = 3

    def _wrap(self, child: "Rational") -> str:
        text = str(child)
        return f"({text})" if child.precedence < self.precedence else text


@dataclass(frozen=True)
class EmptySet(Rational):
    def __str__(self) -> str:
        return "∅"


@dataclass(frozen=True)
class Epsilon(Rational):
    def __str__(self) -> str:
        return "ε"


@dataclass(frozen=True)
class Letter(Rational):
    letter: str

    def __str__(self) -> str:
        return self.letter


@dataclass(frozen=True)
class Union(Rational):
    left: Rational
    right: Rational
    precedence = 0

    def __str__(self) -> str:
        return f"{self._wrap(self.left)} + {self._wrap(self.right)}"


@dataclass(frozen=True)
class Concat(Rational):
    left: Rational
    right: Rational
    precedence = 1

    def __str__(self) -> str:
        return f"{self._wrap(self.left)} {self._wrap(self.right)}"


@dataclass(frozen=True)
class Star(Rational):
    inner: Rational
    precedence = 2

    def __str__(self) -> str:
        text = str(self.inner)
        if self.inner.precedence < 3:
            text = f"({text})"
        return f"{text}*"


EMPTY_SET = EmptySet()
EPSILON = Epsilon()


def letter(a: str) -> Rational:
    return Letter(a)


def union(left: Rational, right: Rational) -> Rational:
    if left == EMPTY_SET:
        return right
    if right == EMPTY_SET or left == right:
        return left
    return Union(left, right)


def concat(left: Rational, right: Rational) -> Rational:
    if left == EMPTY_SET or right == EMPTY_SET:
        return EMPTY_SET
    if left == EPSILON:
        return right
    if right == EPSILON:
        return left
    return Concat(left, right)


def star(inner: Rational) -> Rational:
    if inner in (EMPTY_SET, EPSILON):
        return EPSILON
    if isinstance(inner, Star):
        return inner
    return Star(inner)


def nfa_to_rational(nfa: Nfa) -> Rational:
    """
    Dynamic programming over the allowed intermediate states.

    L[i][j] starts as the letters from q_i to q_j (plus ε on the diagonal);
    round k admits q_k as an intermediate state:
    L[i][j] := L[i][j] + L[i][k] L[k][k]* L[k][j].
    """
    states = nfa.states
    n = len(states)
    index = {q: i for i, q in enumerate(states)}
    table: List[List[Rational]] = [[EMPTY_SET] * n for _ in range(n)]
    for i in range(n):
        table[i][i] = EPSILON
    for p, a, q in sorted(nfa.transitions):
        i, j = index[p], index[q]
        table[i][j] = union(table[i][j], Letter(a))
    for k in range(n):
        loop = star(table[k][k])
        table = [
            [union(table[i][j], concat(concat(table[i][k], loop), table[k][j])) for j in range(n)]
            for i in range(n)
        ]
    result: Rational = EMPTY_SET
    for p in states:
        if p not in nfa.initial:
            continue
        for q in states:
            if q in nfa.final:
                result = union(result, table[index[p]][index[q]])
    return result


def _positions(expr: Rational, out: List[str]) -> "_Glushkov":
    """Annotate with nullable/first/last/follow over numbered letter positions."""
    if isinstance(expr, EmptySet):
        return _Glushkov(False, frozenset(), frozenset(), set())
    if isinstance(expr, Epsilon):
        return _Glushkov(True, frozenset(), frozenset(), set())
    if isinstance(expr, Letter):
        out.append(expr.letter)
        pos = len(out)
        return _Glushkov(False, frozenset([pos]), frozenset([pos]), set())
    if isinstance(expr, Union):
        a, b = _positions(expr.left, out), _positions(expr.right, out)
        return _Glushkov(a.nullable or b.nullable, a.first | b.first, a.last | b.last, a.follow | b.follow)
    if isinstance(expr, Concat):
        a, b = _positions(expr.left, out), _positions(expr.right, out)
        follow = a.follow | b.follow | {(x, y) for x in a.last for y in b.first}
        first = a.first | b.first if a.nullable else a.first
        last = a.last | b.last if b.nullable else b.last
        return _Glushkov(a.nullable and b.nullable, first, last, follow)
    if isinstance(expr, Star):
        a = _positions(expr.inner, out)
        follow = a.follow | {(x, y) for x in a.last for y in a.first}
        return _Glushkov(True, a.first, a.last, follow)
    raise TypeError(f"not a rational expression: {expr!r}")


@dataclass
class _Glushkov:
    nullable: bool
    first: FrozenSet[int]
    last: FrozenSet[int]
    follow: Set[Tuple[int, int]]


def rational_to_nfa(expr: Rational, alphabet: Tuple[str, ...] = ()) -> Nfa:
    """
    Position automaton of the expression (no empty transitions).

    State "0" is initial; state "i" is reached after reading the i-th
    letter occurrence of the expression.
    """
    letters: List[str] = []
    info = _positions(expr, letters)
    states = tuple(str(i) for i in range(len(letters) + 1))
    transitions = {("0", letters[y - 1], str(y)) for y in info.first}
    transitions |= {(str(x), letters[y - 1], str(y)) for x, y in info.follow}
    final = {str(x) for x in info.last}
    if info.nullable:
        final.add("0")
    sigma = tuple(dict.fromkeys(list(alphabet) + letters))
    return Nfa(states, sigma, frozenset(transitions), frozenset(["0"]), frozenset(final))
