"""Alphabets, words and the formal-inverse convention."""
import logging
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from errors import InputError

logger = logging.getLogger(__name__)

Word = Tuple[str, ...]
EMPTY: Word = ()

INVERSE_SUFFIX = "~"
EMPTY_TOKEN = "_"


def inverse_letter(letter: str) -> str:
    """Formal inverse under the `~` suffix convention (a <-> a~)."""
    if letter.endswith(INVERSE_SUFFIX):
        return letter[: -len(INVERSE_SUFFIX)]
    return letter + INVERSE_SUFFIX


def inverse_word(word: Sequence[str], inverse=inverse_letter) -> Word:
    return tuple(inverse(x) for x in reversed(word))


def free_reduce(word: Iterable[str], inverse=inverse_letter) -> Word:
    """Cancel adjacent x x~ pairs until none is left."""
    stack = []
    for letter in word:
        if stack and stack[-1] == inverse(letter):
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def parse_word(text: str) -> Word:
    """Whitespace-separated letters; `_` stands for the empty word."""
    return tuple(tok for tok in text.split() if tok != EMPTY_TOKEN)


def format_word(word: Sequence[str]) -> str:
    return " ".join(word) if word else EMPTY_TOKEN


class Alphabet:
    """
    Finite ordered set of letters with an optional involution.

    Letter order is declaration order and serves as the deterministic
    tie-break everywhere a set of letters is enumerated.
    """

    __slots__ = ("_letters", "_index", "_involution")

    def __init__(self, letters: Iterable[str], involution: Optional[Mapping[str, str]] = None):
        letters = tuple(letters)
        index: Dict[str, int] = {}
        for position, letter in enumerate(letters):
            if not letter or any(ch.isspace() for ch in letter):
                raise InputError(f"invalid letter {letter!r}", {"position": position})
            if letter in index:
                raise InputError(f"duplicate letter {letter!r}", {"letter": letter})
            index[letter] = position
        self._letters = letters
        self._index = index
        self._involution: Optional[Dict[str, str]] = None
        if involution is not None:
            inv = dict(involution)
            for letter in letters:
                image = inv.setdefault(letter, letter)
                if image not in index:
                    raise InputError(
                        f"involution maps {letter!r} outside the alphabet",
                        {"letter": letter, "image": image},
                    )
            for letter in letters:
                if inv[inv[letter]] != letter:
                    raise InputError(
                        f"involution is not of order <= 2 at {letter!r}", {"letter": letter}
                    )
            self._involution = {letter: inv[letter] for letter in letters}

    @classmethod
    def with_formal_inverses(cls, generators: Sequence[str]) -> "Alphabet":
        """Alphabet g1 g1~ g2 g2~ ... with the suffix involution."""
        letters = []
        for g in generators:
            letters.extend([g, inverse_letter(g)])
        return cls(letters, {x: inverse_letter(x) for x in letters})

    @classmethod
    def from_suffix_convention(cls, letters: Sequence[str]) -> "Alphabet":
        """Pairs x and x~ when both are declared; any other letter is self-inverse."""
        declared = set(letters)
        paired = {x: inverse_letter(x) for x in letters if inverse_letter(x) in declared}
        return cls(letters, paired if paired else None)

    @property
    def letters(self) -> Tuple[str, ...]:
        return self._letters

    @property
    def has_involution(self) -> bool:
        return self._involution is not None

    def inverse(self, letter: str) -> str:
        if self._involution is None:
            raise InputError("alphabet declares no involution", {"letter": letter})
        return self._involution[letter]

    def inverse_word(self, word: Sequence[str]) -> Word:
        return tuple(self.inverse(x) for x in reversed(word))

    def index(self, letter: str) -> int:
        return self._index[letter]

    def check_word(self, word: Sequence[str]) -> Word:
        """Return the word as a tuple or raise naming the first foreign letter."""
        for position, letter in enumerate(word):
            if letter not in self._index:
                raise InputError(
                    f"letter {letter!r} at position {position} is not in the alphabet",
                    {"letter": letter, "position": position},
                )
        return tuple(word)

    def __contains__(self, letter: object) -> bool:
        return letter in self._index

    def __iter__(self):
        return iter(self._letters)

    def __len__(self) -> int:
        return len(self._letters)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Alphabet)
            and self._letters == other._letters
            and self._involution == other._involution
        )

    def __hash__(self) -> int:
        return hash(self._letters)

    def __repr__(self) -> str:
        return f"Alphabet({' '.join(self._letters)})"
