"""Word-problem oracles that key group elements canonically for Cayley balls."""
import logging
from abc import ABC, abstractmethod
from typing import Hashable, List, Optional, Sequence, Tuple

from errors import InputError
from finite_groups import FiniteGroup
from graph_of_groups import GraphOfGroups
from pregroups import Pregroup, canonical_key
from rewrite import Word, free_reduce, inverse_letter

logger = logging.getLogger(__name__)

IDENTITY_LABEL = "1"


class GroupOracle(ABC):
    """
    Base class for group oracles.

    Each oracle:
    - Holds a list of generators, each a word over its own letters
    - Maps any word to a canonical key; equal elements get equal keys
    - Renders keys as vertex labels without spaces inside letters
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Oracle name for reports."""
        pass

    @property
    @abstractmethod
    def generators(self) -> Tuple[Word, ...]:
        """The generating set as words."""
        pass

    @abstractmethod
    def key(self, word: Sequence[str]) -> Hashable:
        """Canonical key of the element the word represents."""
        pass

    @abstractmethod
    def inverse(self, word: Sequence[str]) -> Word:
        """A word for the inverse element."""
        pass

    def label(self, word: Sequence[str]) -> str:
        key = self.key(word)
        if isinstance(key, tuple):
            return " ".join(key) if key else IDENTITY_LABEL
        return str(key)

    def is_identity(self, word: Sequence[str]) -> bool:
        return self.key(word) == self.key(())

    def symmetric_generators(self) -> List[Word]:
        """Generators and their inverses, deduplicated by key, identity dropped."""
        seen = {self.key(())}
        out: List[Word] = []
        for s in self.generators:
            for t in (tuple(s), self.inverse(s)):
                k = self.key(t)
                if k not in seen:
                    seen.add(k)
                    out.append(t)
        return out


class FiniteGroupOracle(GroupOracle):
    """Words over element names; the key is the name of the product."""

    def __init__(self, group: FiniteGroup, generators: Optional[Sequence[str]] = None):
        self.group = group
        names = generators if generators is not None else [group.name(g) for g in group.elements() if g != group.identity]
        for x in names:
            group.element(x)
        self._generators = tuple((x,) for x in names)

    @property
    def name(self) -> str:
        return f"finite group of order {self.group.order}"

    @property
    def generators(self) -> Tuple[Word, ...]:
        return self._generators

    def key(self, word: Sequence[str]) -> Hashable:
        return self.group.name(self.group.product([self.group.element(x) for x in word]))

    def inverse(self, word: Sequence[str]) -> Word:
        return (self.group.name(self.group.inv(self.group.element(self.key(word)))),)


class FreeGroupOracle(GroupOracle):
    """Free group on the given letters; the key is the freely reduced word."""

    def __init__(self, letters: Sequence[str]):
        self.letters = tuple(letters)
        self._generators = tuple((x,) for x in self.letters)
        self._alphabet = set(self.letters) | {inverse_letter(x) for x in self.letters}

    @property
    def name(self) -> str:
        return f"free group of rank {len(self.letters)}"

    @property
    def generators(self) -> Tuple[Word, ...]:
        return self._generators

    def key(self, word: Sequence[str]) -> Hashable:
        unknown = [x for x in word if x not in self._alphabet]
        if unknown:
            raise InputError(f"letters {unknown} are not generators or their inverses", {"letters": unknown})
        return free_reduce(word)

    def inverse(self, word: Sequence[str]) -> Word:
        return tuple(inverse_letter(x) for x in reversed(free_reduce(word)))


class GogOracle(GroupOracle):
    """
    pi1(G, T) keyed by S_G normal forms.

    The default generators are the non-identity vertex letters and the
    edge letters off the spanning tree.
    """

    def __init__(self, gog: GraphOfGroups, generators: Optional[Sequence[Sequence[str]]] = None):
        self.gog = gog
        if generators is None:
            generators = [(x,) for x in gog.vertex_letters]
            generators += [(y,) for y in gog.edge_letters if y not in gog.spanning_tree]
        self._generators = tuple(gog.check_word(s) for s in generators)

    @property
    def name(self) -> str:
        return "fundamental group of a graph of groups"

    @property
    def generators(self) -> Tuple[Word, ...]:
        return self._generators

    def key(self, word: Sequence[str]) -> Hashable:
        return self.gog.normal_form(word)

    def inverse(self, word: Sequence[str]) -> Word:
        return self.gog.inverse_word(word)


class PregroupOracle(GroupOracle):
    """U(P) keyed by canonical geodesics; generators default to the non-identity carrier."""

    def __init__(self, pregroup: Pregroup, generators: Optional[Sequence[str]] = None):
        self.pregroup = pregroup
        names = generators if generators is not None else pregroup.carrier[1:]
        for x in names:
            pregroup.index(x)
        self._generators = tuple((x,) for x in names)

    @property
    def name(self) -> str:
        return f"universal group of a pregroup of size {self.pregroup.size}"

    @property
    def generators(self) -> Tuple[Word, ...]:
        return self._generators

    def key(self, word: Sequence[str]) -> Hashable:
        return canonical_key(self.pregroup, word)

    def inverse(self, word: Sequence[str]) -> Word:
        p = self.pregroup
        return tuple(p.name(p.inv(p.index(x))) for x in reversed(word))
