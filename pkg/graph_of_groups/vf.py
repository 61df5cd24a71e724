"""
Virtually-free structures: G = F(Sigma) R with a finite transversal R.

For all letters a, b of Delta = Sigma + Sigma~ + (R - {1}) the tables
give a freely reduced word w(a, b) over Sigma + Sigma~ and r(a, b) in R
with a b = w(a, b) r(a, b) in G.
"""
import logging
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from errors import InputError
from finite_groups import FiniteGroup
from rewrite import Word, free_reduce, inverse_letter

logger = logging.getLogger(__name__)

IDENTITY = "1"


class VFEntry(BaseModel):
    """One table cell: a b = word * rep."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    word: List[str] = Field(default_factory=list, description="Freely reduced word over the free basis")
    rep: str = Field(IDENTITY, description="Coset representative in R")


class VFStructure(BaseModel):
    """Free basis, transversal and product tables of a virtually-free group."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    generators: List[str] = Field(default_factory=list, description="Free basis Sigma")
    representatives: List[str] = Field(..., description="Transversal R, identity first")
    table: Dict[str, Dict[str, VFEntry]]

    @model_validator(mode="after")
    def _check_tables(self) -> "VFStructure":
        if not self.representatives or self.representatives[0] != IDENTITY:
            raise InputError("the transversal must list the identity '1' first")
        delta = self.delta
        if len(set(delta)) != len(delta) or IDENTITY in self.free_letters:
            raise InputError("free letters and representatives must be distinct", {"delta": delta})
        free = set(self.free_letters)
        reps = set(self.representatives)
        for a in delta:
            row = self.table.get(a)
            if row is None:
                raise InputError(f"missing table row for {a!r}", {"letter": a})
            for b in delta:
                entry = row.get(b)
                if entry is None:
                    raise InputError(f"missing table entry ({a}, {b})", {"pair": [a, b]})
                if entry.rep not in reps:
                    raise InputError(f"entry ({a}, {b}) names unknown representative {entry.rep!r}")
                if not set(entry.word) <= free:
                    raise InputError(f"entry ({a}, {b}) leaves the free basis", {"word": entry.word})
                if tuple(entry.word) != free_reduce(entry.word):
                    raise InputError(f"entry ({a}, {b}) is not freely reduced", {"word": entry.word})
        return self

    @property
    def free_letters(self) -> Tuple[str, ...]:
        letters: List[str] = []
        for g in self.generators:
            letters += [g, inverse_letter(g)]
        return tuple(letters)

    @property
    def delta(self) -> Tuple[str, ...]:
        return self.free_letters + tuple(self.representatives[1:])

    def entry(self, a: str, b: str) -> Tuple[Word, str]:
        cell = self.table[a][b]
        return tuple(cell.word), cell.rep

    def times_letter(self, r: str, a: str) -> Tuple[Word, str]:
        """r a = w r' for a representative r and a letter a of Delta."""
        if r == IDENTITY:
            if a in self.free_letters:
                return (a,), IDENTITY
            return (), a
        return self.entry(r, a)

    @property
    def window(self) -> int:
        """Largest |w(r, a)| over representatives r and letters a, at least 1."""
        longest = max(
            (len(self.times_letter(r, a)[0]) for r in self.representatives for a in self.delta),
            default=0,
        )
        return max(1, longest)

    @classmethod
    def from_finite_group(cls, group: FiniteGroup) -> "VFStructure":
        """No free part; R is the whole group and every product stays in R."""
        names = list(group.names)
        table: Dict[str, Dict[str, VFEntry]] = {}
        for g in group.elements():
            if g == group.identity:
                continue
            table[names[g]] = {
                names[h]: VFEntry(rep=names[group.mul(g, h)])
                for h in group.elements()
                if h != group.identity
            }
        return cls(generators=[], representatives=names, table=table)


def infinite_dihedral_vf() -> VFStructure:
    """
    Z/2 * Z/2 = <a, b> with free subgroup <t>, t = a b, and R = {1, a}.

    Uses a t = t~ a and a t~ = t a.
    """
    t, ti, a = "t", inverse_letter("t"), "a"

    def cell(word: List[str], rep: str = IDENTITY) -> VFEntry:
        return VFEntry(word=word, rep=rep)

    table = {
        t: {t: cell([t, t]), ti: cell([]), a: cell([t], a)},
        ti: {t: cell([]), ti: cell([ti, ti]), a: cell([ti], a)},
        a: {t: cell([ti], a), ti: cell([t], a), a: cell([])},
    }
    return VFStructure(generators=[t], representatives=[IDENTITY, a], table=table)
