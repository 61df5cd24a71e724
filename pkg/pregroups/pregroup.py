"""Finite pregroups: partial multiplication tables and their axioms."""
import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from errors import AxiomViolation, InputError
from finite_groups import FiniteGroup
from rewrite import Alphabet, inverse_letter

logger = logging.getLogger(__name__)

ONE = "1"
UNDEFINED = -1


class Pregroup:
    """
    A carrier with 1 at index 0, an involution and a partial product.

    `table[x, y]` is the index of xy, or -1 when (x, y) is not in D.
    Use check_pregroup to build a validated instance.
    """

    def __init__(self, carrier: Sequence[str], inverse: Sequence[int], table: np.ndarray):
        carrier = tuple(carrier)
        n = len(carrier)
        if n == 0 or carrier[0] != ONE:
            raise InputError("the carrier must list the identity '1' first", {"carrier": list(carrier)})
        if len(set(carrier)) != n:
            raise InputError("carrier names must be distinct", {"carrier": list(carrier)})
        table = np.asarray(table, dtype=np.int64)
        if table.shape != (n, n) or len(inverse) != n:
            raise InputError(f"expected an inverse list and a {n}x{n} table", {"shape": list(table.shape)})
        if table.min() < UNDEFINED or table.max() >= n or min(inverse) < 0 or max(inverse) >= n:
            raise InputError("table and inverse entries must be carrier indices or -1")
        self.carrier = carrier
        self.inverse = tuple(int(x) for x in inverse)
        self.table = table
        self.table.setflags(write=False)
        self._index = {name: i for i, name in enumerate(carrier)}

    @property
    def size(self) -> int:
        return len(self.carrier)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"{name!r} is not in the carrier", {"element": name}) from None

    def name(self, x: int) -> str:
        return self.carrier[x]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def defined(self, x: int, y: int) -> bool:
        return self.table[x, y] != UNDEFINED

    def mul(self, x: int, y: int) -> Optional[int]:
        product = int(self.table[x, y])
        return None if product == UNDEFINED else product

    def domain(self) -> Iterator[Tuple[int, int]]:
        """The pairs of D in row-major order."""
        for x, y in np.argwhere(self.table != UNDEFINED):
            yield int(x), int(y)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.carrier, {self.carrier[x]: self.carrier[self.inverse[x]] for x in range(self.size)})

    def indices(self, word: Sequence[str]) -> List[int]:
        return [self.index(x) for x in word]

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"Pregroup(size={self.size}, |D|={int((self.table != UNDEFINED).sum())})"


def check_pregroup(carrier: Sequence[str], inverse: Sequence[int], table: Sequence[Sequence[int]]) -> Pregroup:
    """
    Validate the involution and (P1)-(P4) exhaustively and build the pregroup.

    Raises:
        AxiomViolation: naming the axiom and the offending elements.
        InputError: if the data is malformed.
    """
    p = Pregroup(carrier, inverse, np.asarray(table, dtype=np.int64))
    n, t, inv, names = p.size, p.table, p.inverse, p.carrier

    for x in range(n):
        if inv[inv[x]] != x:
            raise AxiomViolation("involution", f"inverse of the inverse of {names[x]} is not {names[x]}", {"x": names[x]})
    for x in range(n):
        if t[0, x] != x or t[x, 0] != x:
            raise AxiomViolation("P1", f"1 {names[x]} or {names[x]} 1 is not {names[x]}", {"x": names[x]})
    for x in range(n):
        if t[x, inv[x]] != 0 or t[inv[x], x] != 0:
            raise AxiomViolation("P2", f"{names[x]} times its inverse is not 1", {"x": names[x]})

    pairs = list(p.domain())
    right_of: Dict[int, List[int]] = {}
    left_of: Dict[int, List[int]] = {}
    for x, y in pairs:
        right_of.setdefault(x, []).append(y)
        left_of.setdefault(y, []).append(x)

    for x, y in pairs:
        xy = int(t[x, y])
        for z in right_of.get(y, []):
            yz = int(t[y, z])
            left = t[xy, z] != UNDEFINED
            right = t[x, yz] != UNDEFINED
            if left != right or (left and t[xy, z] != t[x, yz]):
                raise AxiomViolation(
                    "P3",
                    f"({names[x]} {names[y]}) {names[z]} and {names[x]} ({names[y]} {names[z]}) disagree",
                    {"x": names[x], "y": names[y], "z": names[z]},
                )

    for x, y in pairs:
        xy = int(t[x, y])
        for w in left_of.get(x, []):
            if t[w, xy] != UNDEFINED:
                continue
            for z in right_of.get(y, []):
                if t[xy, z] == UNDEFINED:
                    raise AxiomViolation(
                        "P4",
                        f"neither {names[w]} [{names[x]} {names[y]}] nor [{names[x]} {names[y]}] {names[z]} is defined",
                        {"w": names[w], "x": names[x], "y": names[y], "z": names[z]},
                    )
    logger.debug(f"pregroup of size {n} satisfies P1-P4")
    return p


def group_pregroup(group: FiniteGroup) -> Pregroup:
    """A finite group with D the whole square."""
    table = np.array(group.table, dtype=np.int64)
    return check_pregroup(group.names, group.inverse_table, table)


def free_pregroup(generators: Sequence[str]) -> Pregroup:
    """{1} + Sigma + Sigma~ with products only against 1 and inverses; U(P) is free on Sigma."""
    carrier = [ONE]
    for g in generators:
        carrier += [g, inverse_letter(g)]
    n = len(carrier)
    inverse = [0] + [i + 1 if i % 2 == 0 else i - 1 for i in range(n - 1)]
    table = np.full((n, n), UNDEFINED, dtype=np.int64)
    for x in range(n):
        table[0, x] = table[x, 0] = x
        table[x, inverse[x]] = 0
    return check_pregroup(carrier, inverse, table)


def free_product_pregroup(groups: Sequence[FiniteGroup]) -> Pregroup:
    """
    The union of finite groups meeting in 1, with D the pairs inside one group.

    U(P) is their free product. Element names must be distinct across groups.
    """
    carrier = [ONE]
    owner: List[Tuple[int, int]] = [(-1, 0)]
    for k, group in enumerate(groups):
        for g in group.elements():
            if g != group.identity:
                carrier.append(group.name(g))
                owner.append((k, g))
    position = {pair: i for i, pair in enumerate(owner)}
    n = len(carrier)
    table = np.full((n, n), UNDEFINED, dtype=np.int64)
    inverse = [0] * n
    for x in range(n):
        table[0, x] = table[x, 0] = x
    for x in range(1, n):
        k, g = owner[x]
        group = groups[k]
        inverse[x] = position[(k, group.inv(g))]
        for y in range(1, n):
            kk, h = owner[y]
            if kk != k:
                continue
            gh = group.mul(g, h)
            table[x, y] = 0 if gh == group.identity else position[(k, gh)]
    return check_pregroup(carrier, inverse, table)
