"""Left-to-right word-problem reducer with a bounded rewriting window."""
import logging
from collections import deque
from functools import lru_cache
from typing import List, Optional, Sequence

from errors import ConstructionError
from rewrite import Word
from .pregroup import Pregroup
from .rewriting import geodesic_reduce

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def inverse_witness_length(p: Pregroup, letter: str, max_length: Optional[int] = None) -> int:
    """
    Length of a shortest w with `letter` w reducing to the empty word.

    Breadth-first over geodesics: a word is extended one carrier letter at
    a time and only its reduced form is kept, so each geodesic is visited
    once. The search stops after `max_length` letters (default |P|).
    """
    cap = len(p.carrier) if max_length is None else max_length
    start = geodesic_reduce(p, (letter,))
    seen = {start}
    frontier = deque([(start, 0)])
    while frontier:
        word, length = frontier.popleft()
        if word == ():
            return length
        if length == cap:
            continue
        for x in p.carrier:
            nxt = geodesic_reduce(p, word + (x,))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, length + 1))
    raise ConstructionError(f"no inverse witness of length <= {cap} for {letter!r}", {"letter": letter})


class StreamingReducer:
    """
    Keeps a geodesic on a stack and reduces only at its top.

    Feeding a letter pushes it and merges the two topmost letters while
    their product is defined; a product equal to 1 is dropped in the same
    step, and a fed 1 is discarded without touching the stack.

    window_bound is the longest shortest inverse witness w_a. After a
    cascade of k steps on a geodesic u, the result still has length at
    least |u| - |w_a|, so k <= window_bound + 1; the Z x Z/2 pregroup
    reaches that limit (y y then y~.a merges twice with window_bound 1).
    """

    def __init__(self, pregroup: Pregroup):
        self.pregroup = pregroup
        self.window_bound = max(inverse_witness_length(pregroup, x) for x in pregroup.carrier)
        self.cascade_limit = self.window_bound + 1
        self.stack: List[int] = []
        self.max_cascade = 0

    def feed(self, letter: str) -> None:
        p = self.pregroup
        x = p.index(letter)
        steps = 0
        if x != 0:
            self.stack.append(x)
            while len(self.stack) >= 2:
                merged = p.mul(self.stack[-2], self.stack[-1])
                if merged is None:
                    break
                self.stack[-2:] = [] if merged == 0 else [merged]
                steps += 1
        if steps > self.cascade_limit:
            raise ConstructionError(
                f"cascade of {steps} steps exceeds the window bound {self.window_bound} + 1",
                {"letter": letter, "steps": steps},
            )
        self.max_cascade = max(self.max_cascade, steps)

    def feed_all(self, word: Sequence[str]) -> "StreamingReducer":
        for x in word:
            self.feed(x)
        return self

    def finish(self) -> Word:
        """The geodesic held on the stack."""
        return tuple(self.pregroup.name(x) for x in self.stack)

    def accepts(self) -> bool:
        return not self.stack
