"""Visible windows of bi-infinite paths inside a ball."""
import logging
from dataclasses import dataclass
from typing import Hashable, List, Optional, Sequence, Tuple

import networkx as nx

from cayley_tw import GroupOracle
from config import settings
from errors import InputError
from rewrite import Word, format_word
from .cut import Cut

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathWindow:
    """The part of a simple bi-infinite path visible in a finite graph, in path order."""
    vertices: Tuple[Hashable, ...]
    margin: int = 1
    label: str = ""

    def __post_init__(self):
        if self.margin < 1:
            raise InputError("margin must be positive", {"margin": self.margin})
        if len(self.vertices) < 2 * self.margin:
            raise InputError(f"window of {len(self.vertices)} vertices is shorter than twice the margin {self.margin}",
                             {"label": self.label})
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("the path is not simple inside the window", {"label": self.label})

    @property
    def head(self) -> Tuple[Hashable, ...]:
        return self.vertices[:self.margin]

    @property
    def tail(self) -> Tuple[Hashable, ...]:
        return self.vertices[-self.margin:]

    def split_by(self, cut: Cut) -> bool:
        """
        Both tails lie on different sides and both sides are infinite.
        """
        if not (cut.infinite and cut.other_infinite):
            return False
        head, tail = set(self.head), set(self.tail)
        return (head <= cut.side and tail <= cut.other) or (head <= cut.other and tail <= cut.side)

    def key(self) -> Tuple[str, ...]:
        forward = tuple(str(v) for v in self.vertices)
        return min(forward, forward[::-1])


@dataclass(frozen=True)
class PeriodicPath:
    """The path through u p^k, k in Z, walked one generator at a time."""
    base: Word
    period: Word

    def describe(self) -> str:
        return f"{format_word(self.base)} ({format_word(self.period)})^k"


def default_margin(ball: nx.Graph) -> int:
    return max(1, ball.graph.get("radius", 4) // 4)


def _steps(oracle: GroupOracle, word: Word) -> List[Word]:
    """Split a word into generator words, longest match first."""
    generators = sorted(set(oracle.symmetric_generators()) | set(oracle.generators), key=lambda s: (-len(s), s))
    steps: List[Word] = []
    i = 0
    while i < len(word):
        match = next((s for s in generators if tuple(word[i:i + len(s)]) == s), None)
        if match is None:
            raise InputError(f"{format_word(word)} is not a product of generators", {"word": list(word)})
        steps.append(match)
        i += len(match)
    return steps


def has_infinite_order(oracle: GroupOracle, word: Sequence[str], checks: Optional[int] = None) -> bool:
    """No power p^i with 1 <= i <= checks is trivial."""
    checks = settings.INFINITE_ORDER_CHECK if checks is None else checks
    return not any(oracle.is_identity(tuple(word) * i) for i in range(1, checks + 1))


def periodic_window(oracle: GroupOracle, ball: nx.Graph, path: PeriodicPath, margin: Optional[int] = None) -> PathWindow:
    """
    Walk from u forwards and backwards until the path leaves the ball.

    Raises:
        InputError: if the period has finite order or the walk is not simple.
    """
    if not path.period or not has_infinite_order(oracle, path.period):
        raise InputError(f"period {format_word(path.period)} has finite order", {"period": list(path.period)})
    steps = _steps(oracle, path.period)
    start = oracle.label(path.base)
    if start not in ball:
        raise InputError(f"base {format_word(path.base)} is outside the ball", {"base": list(path.base)})

    forward: List[Hashable] = []
    word = tuple(path.base)
    while True:
        for s in steps:
            word += s
            vertex = oracle.label(word)
            if vertex not in ball or vertex == start or vertex in forward:
                break
            forward.append(vertex)
        else:
            continue
        break

    backward: List[Hashable] = []
    word = tuple(path.base)
    inverse_steps = [oracle.inverse(s) for s in reversed(steps)]
    while True:
        for s in inverse_steps:
            word += s
            vertex = oracle.label(word)
            if vertex not in ball or vertex == start or vertex in backward:
                break
            backward.append(vertex)
        else:
            continue
        break

    vertices = tuple(reversed(backward)) + (start,) + tuple(forward)
    return PathWindow(vertices, margin or default_margin(ball), path.describe())


def default_periods(oracle: GroupOracle) -> List[Word]:
    """Generators of infinite order, then products of two generators of infinite order."""
    generators = oracle.symmetric_generators()
    periods: List[Word] = []
    seen = set()
    candidates = list(generators) + [s + t for s in generators for t in generators]
    for p in candidates:
        key = oracle.key(p)
        if key in seen:
            continue
        seen.add(key)
        if has_infinite_order(oracle, p):
            periods.append(p)
    return periods


def path_family(
    oracle: GroupOracle,
    ball: nx.Graph,
    periods: Optional[Sequence[Word]] = None,
    margin: Optional[int] = None,
) -> List[PathWindow]:
    """
    Windows of u p^k for every interior vertex u and every period.

    Windows too short for the margin and duplicates are dropped.
    """
    periods = default_periods(oracle) if periods is None else [tuple(p) for p in periods]
    radius = ball.graph["radius"]
    margin = margin or default_margin(ball)
    windows = {}
    for vertex, data in sorted(ball.nodes(data=True), key=lambda item: str(item[0])):
        if data["distance"] >= radius:
            continue
        for p in periods:
            try:
                window = periodic_window(oracle, ball, PeriodicPath(data["word"], p), margin)
            except InputError:
                continue
            windows.setdefault(window.key(), window)
    logger.info(f"🛤️ {len(windows)} path windows from {len(periods)} periods")
    return [windows[k] for k in sorted(windows)]
