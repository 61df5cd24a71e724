"""Permutations, group actions and the conjugating permutation of two free actions."""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from errors import ConstructionError, InputError
from .group import FiniteGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    """
    Bijection of {0..m-1} stored as its image tuple.

    Products compose left to right: `(p * q)(i) == q(p(i))`, so a word
    g1 g2 ... maps to h(g1) * h(g2) * ... and actions are right actions.
    """
    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise InputError("not a permutation", {"images": list(self.images)})

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise InputError("degree mismatch", {"left": self.degree, "right": other.degree})
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def fixed_points(self) -> List[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    def cycles(self) -> List[Tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def compose(perms: Iterable[Permutation], degree: int) -> Permutation:
    result = Permutation.identity(degree)
    for p in perms:
        result = result * p
    return result


def permutation_closure(generators: Sequence[Permutation], degree: int) -> frozenset:
    """All elements of the permutation group generated by `generators` (naive orbit closure)."""
    identity = Permutation.identity(degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    logger.debug(f"closure of {len(generators)} generators on {degree} points has order {len(seen)}")
    return frozenset(seen)


class GroupAction:
    """A right action of a finite group, one permutation per element."""

    def __init__(self, group: FiniteGroup, images: Sequence[Permutation]):
        if len(images) != group.order:
            raise InputError("one permutation per group element is required", {"expected": group.order})
        degrees = {p.degree for p in images}
        if len(degrees) != 1:
            raise InputError("action permutations have different degrees", {"degrees": sorted(degrees)})
        self.group = group
        self.images = tuple(images)
        self.degree = degrees.pop()

    def __call__(self, g: int) -> Permutation:
        return self.images[g]

    def check_homomorphism(self) -> None:
        """Exhaustive check of alpha(gh) = alpha(g) * alpha(h)."""
        for g in self.group.elements():
            for h in self.group.elements():
                if self.images[self.group.mul(g, h)] != self.images[g] * self.images[h]:
                    raise ConstructionError(
                        "action is not a homomorphism",
                        {"g": self.group.name(g), "h": self.group.name(h)},
                    )

    def is_free(self) -> bool:
        return all(not self.images[g].fixed_points() for g in self.group.elements() if g != 0)

    def orbit(self, point: int) -> Dict[int, int]:
        """Point -> the element carrying `point` there (first found by element index)."""
        reached: Dict[int, int] = {}
        for g in self.group.elements():
            reached.setdefault(self.images[g](point), g)
        return reached

    def restrict(self, subgroup: FiniteGroup, embedding: Sequence[int]) -> "GroupAction":
        """Pull back along an injective homomorphism subgroup -> group."""
        return GroupAction(subgroup, [self.images[embedding[a]] for a in subgroup.elements()])

    def conjugate(self, phi: Permutation) -> "GroupAction":
        """The action g -> phi * alpha(g) * phi^-1."""
        inv = phi.inverse()
        return GroupAction(self.group, [phi * p * inv for p in self.images])


def free_action(group: FiniteGroup, degree: int) -> GroupAction:
    """
    The right-regular action repeated on degree/|G| consecutive blocks.

    Point b*|G| + x is sent by g to b*|G| + x·g.
    """
    n = group.order
    if degree <= 0 or degree % n:
        raise InputError(f"|G| = {n} does not divide the degree {degree}", {"order": n, "degree": degree})
    images = []
    for g in group.elements():
        images.append(Permutation(tuple(
            (point // n) * n + group.mul(point % n, g) for point in range(degree)
        )))
    return GroupAction(group, images)


def conjugator(alpha: GroupAction, beta: GroupAction) -> Permutation:
    """
    A permutation phi with alpha(g) = phi^-1 * beta(g) * phi for every g.

    Orbits of alpha and beta are matched in order of their least unmatched
    point; within matched orbits phi^-1 sends r·alpha(g) to s·beta(g).

    Raises:
        InputError: if the actions are not free or differ in group or degree.
        ConstructionError: if the conjugation identity fails (never expected).
    """
    if alpha.group != beta.group or alpha.degree != beta.degree:
        raise InputError("actions must be of the same group on the same number of points")
    if not alpha.is_free() or not beta.is_free():
        raise InputError("conjugator needs two free actions")
    m = alpha.degree
    psi = [-1] * m  # phi^-1
    unmatched_beta = sorted(range(m))
    used_beta = set()
    for r in range(m):
        if psi[r] != -1:
            continue
        s = next(x for x in unmatched_beta if x not in used_beta)
        for g in alpha.group.elements():
            x, y = alpha(g)(r), beta(g)(s)
            psi[x] = y
            used_beta.add(y)
    phi = Permutation(tuple(psi)).inverse()
    inv = phi.inverse()
    for g in alpha.group.elements():
        if alpha(g) != inv * beta(g) * phi:
            raise ConstructionError("conjugator failed its identity check", {"element": alpha.group.name(g)})
    return phi
