"""
Text format for semi-Thue systems.

    letters: a a~ b b~
    a a~ -> _
    a~ a -> _

One rule per line, letters separated by whitespace, `_` is the empty
word, `#` starts a comment. A `~` suffix pairs a letter with its
involution partner.
"""
import logging
from typing import List, Tuple

from errors import InputError, ParseError
from .alphabet import Alphabet, EMPTY_TOKEN, format_word, parse_word
from .system import SemiThueSystem

logger = logging.getLogger(__name__)

HEADER = "letters:"
ARROW = "->"


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def parse_system(text: str, source: str = "<input>") -> SemiThueSystem:
    alphabet = None
    rules: List[Tuple[tuple, tuple]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        column = len(line) - len(line.lstrip()) + 1
        if line.lstrip().startswith(HEADER):
            if alphabet is not None:
                raise ParseError("duplicate letters header", lineno, column, source)
            letters = line.lstrip()[len(HEADER):].split()
            try:
                alphabet = Alphabet.from_suffix_convention(letters)
            except InputError as e:
                raise ParseError(e.message, lineno, column, source) from e
            continue
        if alphabet is None:
            raise ParseError("expected 'letters:' header before the first rule", lineno, column, source)
        if ARROW not in line:
            raise ParseError("expected 'lhs -> rhs'", lineno, column, source)
        lhs_text, rhs_text = line.split(ARROW, 1)
        lhs, rhs = parse_word(lhs_text), parse_word(rhs_text)
        for token, offset in _token_columns(line):
            if token not in (ARROW, EMPTY_TOKEN) and token not in alphabet:
                raise ParseError(f"unknown letter {token!r}", lineno, offset, source)
        if not lhs:
            raise ParseError("empty left-hand side", lineno, column, source)
        rules.append((lhs, rhs))
    if alphabet is None:
        raise ParseError("missing 'letters:' header", 1, 1, source)
    system = SemiThueSystem(alphabet, rules)
    logger.debug(f"parsed {len(system)} rules from {source}")
    return system


def _token_columns(line: str):
    column = 0
    for token in line.split():
        column = line.index(token, column)
        yield token, column + 1
        column += len(token)


def format_system(system: SemiThueSystem) -> str:
    lines = [f"{HEADER} {' '.join(system.alphabet.letters)}"]
    lines.extend(f"{format_word(r.lhs)} {ARROW} {format_word(r.rhs)}" for r in system.rules)
    return "\n".join(lines) + "\n"
