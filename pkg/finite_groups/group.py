"""Finite groups given by multiplication tables."""
import itertools
import logging
from typing import List, Optional, Sequence

import numpy as np

from config import settings
from errors import AxiomViolation, InputError

logger = logging.getLogger(__name__)


class FiniteGroup:
    """
    A finite group on the indices 0..n-1 with identity 0.

    `table[g, h]` is the index of g·h. Element names are optional aliases
    used as letters by the other packages; the identity is always named "1".
    """

    def __init__(self, table: np.ndarray, inverse: Sequence[int], names: Sequence[str]):
        self.table = table
        self.table.setflags(write=False)
        self.inverse_table = tuple(inverse)
        self.names = tuple(names)
        self._by_name = {name: i for i, name in enumerate(self.names)}

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def identity(self) -> int:
        return 0

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def inv(self, g: int) -> int:
        return self.inverse_table[g]

    def product(self, elements: Sequence[int]) -> int:
        result = 0
        for g in elements:
            result = int(self.table[result, g])
        return result

    def name(self, g: int) -> str:
        return self.names[g]

    def element(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise InputError(f"unknown group element {name!r}", {"element": name}) from None

    def elements(self) -> range:
        return range(self.order)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, names={list(self.names)})"


def default_names(n: int) -> List[str]:
    return ["1"] + [f"g{i}" for i in range(1, n)]


def check_group(
    table: Sequence[Sequence[int]],
    names: Optional[Sequence[str]] = None,
    seed: Optional[int] = None,
) -> FiniteGroup:
    """
    Validate a candidate multiplication table and build the group.

    Associativity is checked on every triple when the order is at most
    settings.ASSOCIATIVITY_FULL_CHECK_MAX and on a random sample above.

    Raises:
        AxiomViolation: naming the failed axiom and the offending elements.
        InputError: if the table is not square or names are malformed.
    """
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise InputError("group table must be a non-empty square table", {"shape": list(t.shape)})
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        bad = tuple(int(x) for x in np.argwhere((t < 0) | (t >= n))[0])
        raise AxiomViolation("closure", f"entry at {bad} is not an element index", {"cell": bad})
    if names is None:
        names = default_names(n)
    names = list(names)
    if len(names) != n or len(set(names)) != n:
        raise InputError("element names must be distinct and one per element", {"names": names})

    ident = np.arange(n)
    for x in range(n):
        if t[0, x] != x or t[x, 0] != x:
            raise AxiomViolation("identity", f"element 0 is not an identity for {names[x]}", {"element": names[x]})

    inverse = []
    for x in range(n):
        hits = np.nonzero((t[x] == 0) & (t[:, x] == 0))[0]
        if len(hits) == 0:
            raise AxiomViolation("inverse", f"{names[x]} has no two-sided inverse", {"element": names[x]})
        inverse.append(int(hits[0]))

    for x in range(n):
        if not np.array_equal(np.sort(t[x]), ident):
            raise AxiomViolation("latin", f"row of {names[x]} repeats an element", {"element": names[x]})

    _check_associativity(t, names, seed)
    logger.debug(f"group table of order {n} validated")
    return FiniteGroup(t, inverse, names)


def _check_associativity(t: np.ndarray, names: Sequence[str], seed: Optional[int]) -> None:
    n = t.shape[0]
    if n <= settings.ASSOCIATIVITY_FULL_CHECK_MAX:
        left = t[t]                                 # left[a, b, c] = (ab)c
        right = t[np.arange(n)[:, None, None], t[None, :, :]]  # right[a, b, c] = a(bc)
        bad = np.argwhere(left != right)
        if len(bad):
            a, b, c = (int(x) for x in bad[0])
            raise AxiomViolation(
                "associativity",
                f"({names[a]} {names[b]}) {names[c]} != {names[a]} ({names[b]} {names[c]})",
                {"triple": [names[a], names[b], names[c]]},
            )
        return
    rng = np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)
    a, b, c = rng.integers(0, n, size=(3, settings.ASSOCIATIVITY_SAMPLES))
    bad = np.nonzero(t[t[a, b], c] != t[a, t[b, c]])[0]
    if len(bad):
        i = int(bad[0])
        triple = [names[int(a[i])], names[int(b[i])], names[int(c[i])]]
        raise AxiomViolation("associativity", f"sampled triple {triple} fails", {"triple": triple})
    logger.warning(f"associativity of order-{n} table checked on {settings.ASSOCIATIVITY_SAMPLES} samples only")


def cyclic(n: int, generator: str = "a") -> FiniteGroup:
    """Z/n with element i = generator^i, named 1, a, a2, ..."""
    if n < 1:
        raise InputError("cyclic group order must be positive", {"order": n})
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["1"] + [generator if i == 1 else f"{generator}{i}" for i in range(1, n)]
    return check_group(table, names)


def symmetric(n: int) -> FiniteGroup:
    """Sym(n), n <= 5, elements in lexicographic order of their image tuples."""
    if not 1 <= n <= 5:
        raise InputError("symmetric groups are supported for 1 <= n <= 5", {"n": n})
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # first-then composition: (p q)(i) = q(p(i))
    table = [[index[tuple(q[p[i]] for i in range(n))] for q in perms] for p in perms]
    names = ["1"] + ["s" + "".join(str(x) for x in p) for p in perms[1:]]
    return check_group(table, names)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """G x H with (g1, h1) at index g1 * |H| + h1."""
    m = h.order
    n = g.order * m
    table = [
        [g.mul(i // m, j // m) * m + h.mul(i % m, j % m) for j in range(n)]
        for i in range(n)
    ]
    names = ["1"]
    for i in range(1, n):
        gi, hi = i // m, i % m
        parts = [p for p in (g.names[gi] if gi else "", h.names[hi] if hi else "") if p]
        names.append(".".join(parts))
    return check_group(table, names)


def trivial_group() -> FiniteGroup:
    return cyclic(1)


def element_order(group: FiniteGroup, g: int) -> int:
    k, x = 1, g
    while x != 0:
        x = group.mul(x, g)
        k += 1
    return k


def subgroup_closure(group: FiniteGroup, generators: Sequence[int]) -> frozenset:
    """Elements of the subgroup generated by `generators`."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = group.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def left_cosets(group: FiniteGroup, subgroup: Sequence[int]) -> List[List[int]]:
    """
    Left cosets gH, each listed with its least element first.

    The coset of the identity comes first; the rest follow by least element.
    """
    seen = set()
    cosets = []
    for g in group.elements():
        if g in seen:
            continue
        coset = sorted({group.mul(g, h) for h in subgroup})
        seen.update(coset)
        cosets.append(coset)
    return cosets


def is_homomorphism(source: FiniteGroup, target: FiniteGroup, image: Sequence[int]) -> bool:
    return all(
        image[source.mul(g, h)] == target.mul(image[g], image[h])
        for g in source.elements()
        for h in source.elements()
    )


def relabel(group: FiniteGroup, names: Sequence[str]) -> FiniteGroup:
    """The same table under new element names; the identity keeps the name "1"."""
    names = list(names)
    if len(names) != group.order or len(set(names)) != group.order:
        raise InputError("element names must be distinct and one per element", {"names": names})
    if names[0] != "1":
        raise InputError("the identity must be named '1'", {"names": names})
    return FiniteGroup(group.table.copy(), group.inverse_table, names)
