"""Group presentations read off a grammar whose language contains the empty word."""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from errors import InputError
from rewrite import Word, format_word, inverse_letter, inverse_word
from .grammar import Cfg, cyk, reduce_grammar, shortest_yields, to_cnf

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HotzPresentation:
    """
    Generators V and Sigma, one relation lhs = rhs per production, the
    terminal witness of every variable and the relators obtained by
    substituting those witnesses.
    """
    generators: Tuple[str, ...]
    relations: Tuple[Tuple[Word, Word], ...]
    witnesses: Dict[str, Word]
    relators: Tuple[Word, ...]

    def lines(self) -> List[str]:
        out = [f"generators: {' '.join(self.generators) or '_'}"]
        out += [f"relation: {format_word(lhs)} = {format_word(rhs)}" for lhs, rhs in self.relations]
        out += [f"witness {v}: {format_word(w)}" for v, w in sorted(self.witnesses.items())]
        out += [f"relator: {format_word(r)}" for r in self.relators]
        return out


def hotz_presentation(g: Cfg, inverse: Callable[[str], str] = inverse_letter) -> HotzPresentation:
    """
    Present the group F(V + Sigma) / {A = alpha : A -> alpha in P}.

    The grammar is reduced first. Each variable A gets a shortest
    terminal word w_A with A =>* w_A; substituting w_A for A turns each
    relation into a relator over Sigma, formed as psi(lhs) psi(rhs)^-1
    with `inverse` giving the inverse of a terminal.

    Raises:
        InputError: if the empty word is not in the language.
    """
    reduced = reduce_grammar(g)
    if not cyk(to_cnf(reduced), ()):
        raise InputError("the empty word is not in the language of the grammar")
    witnesses = shortest_yields(reduced)

    def substitute(word: Word) -> Word:
        out: Word = ()
        for s in word:
            out += witnesses[s] if reduced.is_variable(s) else (s,)
        return out

    relations = tuple(((lhs,), rhs) for lhs, rhs in reduced.productions)
    relators = tuple(
        substitute(lhs) + inverse_word(substitute(rhs), inverse) for lhs, rhs in relations
    )
    logger.info(
        f"📐 Hotz presentation: {len(reduced.variables) + len(reduced.terminals)} generators, "
        f"{len(relations)} relations"
    )
    return HotzPresentation(
        reduced.variables + reduced.terminals,
        relations,
        witnesses,
        relators,
    )
