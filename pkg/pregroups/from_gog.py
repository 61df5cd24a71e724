"""
The finite pregroup of a graph of finite groups.

Its elements are the loops at the base vertex whose path runs down the
spanning tree, crosses at most one non-tree edge (or turns around at a
vertex) and returns along the tree. Carrier elements are named by their
S_G normal forms with letters joined by "."; the identity is "1".
"""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence

import numpy as np

from errors import AxiomViolation, ConstructionError
from graph_of_groups import GraphOfGroups
from rewrite import Word
from .pregroup import ONE, UNDEFINED, Pregroup, check_pregroup

logger = logging.getLogger(__name__)

SEPARATOR = "."


@dataclass(frozen=True)
class GogPregroup:
    """The pregroup and the word over the graph-of-groups alphabet behind each element."""
    pregroup: Pregroup
    words: Dict[str, Word]

    def embed(self, word: Sequence[str]) -> Word:
        """Concatenate the words of the carrier letters."""
        out: Word = ()
        for x in word:
            out += self.words[x]
        return out


def element_name(word: Word) -> str:
    return SEPARATOR.join(word) if word else ONE


def _shapes(gog: GraphOfGroups) -> List[Word]:
    """Edge sequences T[P0, s(y)] y T[t(y), P0] for non-tree y, and T[P0, P] T[P, P0]."""
    shapes = []
    for vertex in gog.vertices:
        down = gog.tree_path(gog.base, vertex)
        shapes.append(down + gog.tree_path(vertex, gog.base))
    for y in gog.edge_letters:
        if y in gog.spanning_tree:
            continue
        edge = gog.edges[y]
        shapes.append(gog.tree_path(gog.base, edge.source) + (y,) + gog.tree_path(edge.target, gog.base))
    return shapes


def _vertices_along(gog: GraphOfGroups, path: Word) -> List[str]:
    visited = [gog.base]
    for y in path:
        visited.append(gog.edges[y].target)
    return visited


def _candidate_words(gog: GraphOfGroups, path: Word) -> List[Word]:
    """All g0 y1 g1 ... ys gs along the path with g_i in the vertex group at step i."""
    stops = _vertices_along(gog, path)
    choices = [range(gog.vertex_groups[v].order) for v in stops]
    words = []
    for picks in product(*choices):
        word: Word = ()
        for i, g in enumerate(picks):
            word += gog.element_letter(stops[i], g)
            if i < len(path):
                word += (path[i],)
        words.append(word)
    return words


def lemma_shape_in_carrier(gog: GraphOfGroups, word: Sequence[str]) -> bool:
    """
    Carrier membership from the shape of a Britton-reduced form.

    The reduced word must be a loop at the base whose edge sequence is
    T[P0, s(y)] y T[t(y), P0] for a non-tree y, or T[P0, P] T[P, P0] for
    some vertex P.
    """
    if not gog.is_path_typed(word):
        return False
    reduced = gog.britton_reduce(word)
    edges = gog.edge_sequence(reduced)
    for y in gog.edge_letters:
        if y in gog.spanning_tree:
            continue
        edge = gog.edges[y]
        if edges == gog.tree_path(gog.base, edge.source) + (y,) + gog.tree_path(edge.target, gog.base):
            return True
    for vertex in gog.vertices:
        if edges == gog.tree_path(gog.base, vertex) + gog.tree_path(vertex, gog.base):
            return True
    return False


def pregroup_from_gog(gog: GraphOfGroups) -> GogPregroup:
    """
    Build the pregroup whose universal group is pi1(G, T).

    (x, y) is in D iff the normal form of x y is again a carrier element.
    Every decision is cross-checked against lemma_shape_in_carrier and
    the result is re-verified against the pregroup axioms.

    Raises:
        ConstructionError: if the two membership tests disagree or an axiom fails.
    """
    forms: Dict[Word, None] = {}
    for shape in _shapes(gog):
        for word in _candidate_words(gog, shape):
            forms.setdefault(gog.normal_form(word), None)
    alphabet = gog.alphabet
    elements = sorted(forms, key=lambda w: (len(w), [alphabet.index(x) for x in w]))
    index = {w: i for i, w in enumerate(elements)}
    n = len(elements)
    logger.info(f"🧩 pregroup carrier has {n} elements")

    inverse = [index[gog.normal_form(gog.inverse_word(w))] for w in elements]
    table = np.full((n, n), UNDEFINED, dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            product_form = gog.normal_form(x + y)
            k: Optional[int] = index.get(product_form)
            if (k is not None) != lemma_shape_in_carrier(gog, x + y):
                raise ConstructionError(
                    "carrier membership by normal form and by shape disagree",
                    {"x": list(x), "y": list(y), "product": list(product_form)},
                )
            if k is not None:
                table[i, j] = k
    carrier = [element_name(w) for w in elements]
    try:
        pregroup = check_pregroup(carrier, inverse, table)
    except AxiomViolation as e:
        raise ConstructionError(f"pregroup of the graph of groups fails {e.message}", e.witnesses) from e
    logger.info(f"✅ pregroup verified: {int((table != UNDEFINED).sum())} defined products")
    return GogPregroup(pregroup, {element_name(w): w for w in elements})

