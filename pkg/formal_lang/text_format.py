"""
Text formats for automata, grammars and push-down automata.

Automaton:

    states: 1 2
    alphabet: a b
    initial: 1
    final: 2
    trans 1 a 2

Grammar (terminals are the symbols that never appear on the left):

    axiom: S
    S -> a S b | _

Push-down automaton, one transition per line as
`trans POP STATE READ PUSH STATE` with dot-separated words and `_` for
the empty word (stack top at the right end). Only whole-line comments are
allowed here since `#` is the bottom-of-stack marker:

    states: q0 q1
    initial: q0
    final: q1
    input: a b
    stack: S a b
    trans _ q0 a a q0
"""
import logging
from typing import Dict, List, Optional, Tuple

from errors import InputError, ParseError
from rewrite import EMPTY, Word, format_word
from .automata import Nfa
from .grammar import Cfg
from .pda import Pda, Transition

logger = logging.getLogger(__name__)

ARROW = "->"
ALTERNATIVE = "|"
EMPTY_TOKEN = "_"


def _lines(text: str, inline_comments: bool = True):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if inline_comments:
            line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _header(line: str) -> Optional[Tuple[str, List[str]]]:
    head, sep, rest = line.partition(":")
    if not sep or " " in head.strip():
        return None
    return head.strip(), rest.split()


def parse_automaton(text: str, source: str = "<input>") -> Nfa:
    fields: Dict[str, List[str]] = {}
    transitions = []
    for lineno, line in _lines(text):
        if line.startswith("trans"):
            parts = line.split()
            if len(parts) != 4:
                raise ParseError("expected 'trans p a q'", lineno, 1, source)
            transitions.append((parts[1], parts[2], parts[3]))
            continue
        header = _header(line)
        if header is None or header[0] not in ("states", "alphabet", "initial", "final"):
            raise ParseError(f"unrecognised line {line!r}", lineno, 1, source)
        fields[header[0]] = header[1]
    for key in ("states", "alphabet", "initial", "final"):
        fields.setdefault(key, [])
    try:
        return Nfa(
            tuple(fields["states"]),
            tuple(fields["alphabet"]),
            frozenset(transitions),
            frozenset(fields["initial"]),
            frozenset(fields["final"]),
        )
    except InputError as e:
        raise ParseError(e.message, 1, 1, source) from e


def format_automaton(nfa: Nfa) -> str:
    lines = [
        "states: " + " ".join(nfa.states),
        "alphabet: " + " ".join(nfa.alphabet),
        "initial: " + " ".join(q for q in nfa.states if q in nfa.initial),
        "final: " + " ".join(q for q in nfa.states if q in nfa.final),
    ]
    order = {q: i for i, q in enumerate(nfa.states)}
    letters = {a: i for i, a in enumerate(nfa.alphabet)}
    for p, a, q in sorted(nfa.transitions, key=lambda t: (order[t[0]], letters[t[1]], order[t[2]])):
        lines.append(f"trans {p} {a} {q}")
    return "\n".join(lines) + "\n"


def parse_grammar(text: str, source: str = "<input>") -> Cfg:
    axiom: Optional[str] = None
    terminals: List[str] = []
    productions: List[Tuple[str, Word]] = []
    for lineno, line in _lines(text):
        if line.startswith("axiom:"):
            parts = line[len("axiom:"):].split()
            if len(parts) != 1:
                raise ParseError("expected 'axiom: S'", lineno, 1, source)
            axiom = parts[0]
            continue
        if line.startswith("terminals:"):
            terminals = line[len("terminals:"):].split()
            continue
        if ARROW not in line:
            raise ParseError("expected 'A -> alpha | beta'", lineno, 1, source)
        lhs_text, rhs_text = line.split(ARROW, 1)
        lhs = lhs_text.split()
        if len(lhs) != 1:
            raise ParseError("left-hand side must be a single variable", lineno, 1, source)
        for alternative in rhs_text.split(ALTERNATIVE):
            rhs = tuple(tok for tok in alternative.split() if tok != EMPTY_TOKEN)
            productions.append((lhs[0], rhs))
    if axiom is None:
        if not productions:
            raise ParseError("empty grammar", 1, 1, source)
        axiom = productions[0][0]
    try:
        return Cfg.build(productions, axiom, terminals)
    except InputError as e:
        raise ParseError(e.message, 1, 1, source) from e


def format_grammar(g: Cfg) -> str:
    lines = [f"axiom: {g.axiom}", "terminals: " + " ".join(g.terminals)]
    for v in g.variables:
        alternatives = g.productions_of(v)
        if alternatives:
            lines.append(f"{v} {ARROW} " + f" {ALTERNATIVE} ".join(format_word(rhs) for rhs in alternatives))
    return "\n".join(lines) + "\n"


def _stack_word(token: str) -> Word:
    return EMPTY if token == EMPTY_TOKEN else tuple(token.split("."))


def _dotted(word: Word) -> str:
    return ".".join(word) if word else EMPTY_TOKEN


def parse_pda(text: str, source: str = "<input>") -> Pda:
    fields: Dict[str, List[str]] = {}
    transitions: List[Transition] = []
    for lineno, line in _lines(text, inline_comments=False):
        if line.startswith("trans"):
            parts = line.split()
            if len(parts) != 6:
                raise ParseError("expected 'trans POP STATE READ PUSH STATE'", lineno, 1, source)
            _, pop, p, read, push, q = parts
            transitions.append(Transition(_stack_word(pop), p, _stack_word(read), _stack_word(push), q))
            continue
        header = _header(line)
        if header is None or header[0] not in ("states", "initial", "final", "input", "stack"):
            raise ParseError(f"unrecognised line {line!r}", lineno, 1, source)
        fields[header[0]] = header[1]
    if len(fields.get("initial", [])) != 1:
        raise ParseError("expected exactly one initial state", 1, 1, source)
    try:
        return Pda(
            tuple(fields.get("states", [])),
            tuple(fields.get("input", [])),
            tuple(fields.get("stack", [])),
            tuple(transitions),
            fields["initial"][0],
            frozenset(fields.get("final", [])),
        )
    except InputError as e:
        raise ParseError(e.message, 1, 1, source) from e


def format_pda(m: Pda) -> str:
    lines = [
        "states: " + " ".join(m.states),
        f"initial: {m.initial}",
        "final: " + " ".join(q for q in m.states if q in m.final),
        "input: " + " ".join(m.input_alphabet),
        "stack: " + " ".join(m.stack_alphabet),
    ]
    for t in m.transitions:
        lines.append(f"trans {_dotted(t.pop)} {t.source} {_dotted(t.read)} {_dotted(t.push)} {t.target}")
    return "\n".join(lines) + "\n"
