"""A homomorphism pi1(G, T) -> Sym(X) that is injective on vertex groups, and the free kernel it yields."""
import logging
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence

from errors import ConstructionError
from finite_groups import GroupAction, Permutation, conjugator, free_action, permutation_closure
from rewrite import format_word
from .group import GraphOfGroups

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SymHomomorphism:
    """
    Images of the pi1 generators in Sym(X).

    Vertex letters act through free actions; tree edges map to the
    identity, so the map factors through pi1(G, T).
    """
    degree: int
    images: Dict[str, Permutation]
    vertex_actions: Dict[str, GroupAction]

    def image(self, word: Sequence[str]) -> Permutation:
        """h(x1) * h(x2) * ..., with y~ sent to h(y)^-1."""
        result = Permutation.identity(self.degree)
        for x in word:
            if x in self.images:
                result = result * self.images[x]
            else:
                result = result * self.images[x[:-1]].inverse()
        return result


@dataclass(frozen=True)
class FreeSubgroupData:
    """Index N of the kernel of h and its rank from the Euler characteristic count."""
    degree: int
    index: int
    rank: int


def sym_homomorphism(gog: GraphOfGroups) -> SymHomomorphism:
    """
    Build h with |X| = lcm of the vertex-group orders.

    Every vertex group starts with the block-regular free action. Walking
    the spanning tree from the base, the action at a new vertex Q reached
    by y is conjugated so that h_P(a^y) = h_Q(a^y~) for all a in G_y,
    which lets h(y) be the identity. A non-tree edge y gets the
    permutation conjugating a -> h_Q(a^y~) into a -> h_P(a^y).

    Raises:
        ConstructionError: if some defining relator does not map to the identity.
    """
    degree = math.lcm(*(g.order for g in gog.vertex_groups.values()))
    actions: Dict[str, GroupAction] = {}
    actions[gog.base] = free_action(gog.vertex_groups[gog.base], degree)
    images: Dict[str, Permutation] = {}
    queue = deque([gog.base])
    while queue:
        current = queue.popleft()
        for y in gog.edge_letters:
            edge = gog.edges[y]
            if y not in gog.spanning_tree or edge.source != current or edge.target in actions:
                continue
            back = gog.edges[edge.reverse]
            fresh = free_action(gog.vertex_groups[edge.target], degree)
            alpha = fresh.restrict(edge.group, back.embedding)
            beta = actions[current].restrict(edge.group, edge.embedding)
            actions[edge.target] = fresh.conjugate(conjugator(alpha, beta))
            queue.append(edge.target)

    for declared in gog.declared_edges:
        if declared.name in gog.spanning_tree:
            images[declared.name] = Permutation.identity(degree)
            continue
        alpha = actions[declared.target].restrict(declared.group, declared.target_map)
        beta = actions[declared.source].restrict(declared.group, declared.source_map)
        images[declared.name] = conjugator(alpha, beta)
    for x in gog.vertex_letters:
        info = gog.letter(x)
        images[x] = actions[info.vertex](info.element)

    h = SymHomomorphism(degree, images, actions)
    for relator in gog.pi1_presentation().relators:
        if not h.image(relator).is_identity():
            raise ConstructionError(
                f"relator {format_word(relator)} does not map to the identity",
                {"relator": list(relator), "image": str(h.image(relator))},
            )
    logger.info(f"🔁 Sym({degree}) homomorphism verified on all relators")
    return h


def free_subgroup_data(gog: GraphOfGroups) -> FreeSubgroupData:
    """
    Index and rank of the free kernel of the Sym(X) homomorphism.

    N is the order of the image group. The rank follows from
    r = 1 + N (sum over declared edges of 1/|G_y| - sum over vertices of 1/|G_P|).

    Raises:
        ConstructionError: if the rank is not a non-negative integer.
    """
    h = sym_homomorphism(gog)
    generators = [h.images[x] for x in gog.pi1_presentation().generators]
    index = len(permutation_closure(generators, h.degree))
    euler = sum(Fraction(1, declared.group.order) for declared in gog.declared_edges)
    euler -= sum(Fraction(1, g.order) for g in gog.vertex_groups.values())
    rank = 1 + index * euler
    if rank.denominator != 1 or rank < 0:
        raise ConstructionError(
            f"rank {rank} of the free subgroup is not a non-negative integer",
            {"index": index, "rank": str(rank)},
        )
    logger.info(f"📊 free subgroup of index {index} and rank {rank}")
    return FreeSubgroupData(h.degree, index, int(rank))
