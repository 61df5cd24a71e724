"""Local expansion of the Bass-Serre tree from S_G-irreducible words."""
import logging
from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx

from errors import InputError
from rewrite import Word, format_word
from .group import GraphOfGroups

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BstNode:
    """The coset v G_P for v = c0 y1 c1 y2 ... y_k with P = t(y_k) (the base for the root)."""
    word: Word
    vertex: str
    depth: int = 0

    def __str__(self) -> str:
        return f"{format_word(self.word)} @ {self.vertex}"


def bst_root(gog: GraphOfGroups) -> BstNode:
    return BstNode((), gog.base)


def bst_children(gog: GraphOfGroups, node: BstNode) -> List[Tuple[Word, BstNode]]:
    """
    Children v c y of v = ... y_k for edges y leaving t(y_k) and c in C_y.

    The label 1 y_k~ is skipped: v y_k~ would not be irreducible.
    """
    if node.vertex not in gog.vertex_groups:
        raise InputError(f"node names unknown vertex {node.vertex!r}", {"vertex": node.vertex})
    last = node.word[-1] if node.word else None
    children = []
    for y in gog.edge_letters:
        edge = gog.edges[y]
        if edge.source != node.vertex:
            continue
        for c in gog.coset_reps(y):
            if c == 0 and last is not None and y == gog.edges[last].reverse:
                continue
            label = gog.element_letter(edge.source, c) + (y,)
            children.append((label, BstNode(node.word + label, edge.target, node.depth + 1)))
    return children


def bst_ball(gog: GraphOfGroups, depth: int) -> nx.Graph:
    """
    The rooted fragment of the Bass-Serre tree down to `depth`.

    Nodes are irreducible words with attributes `vertex`, `depth` and
    `stabilizer` (|G_P| of the node's vertex); edges carry their `label`.
    """
    if depth < 0:
        raise InputError("depth must be non-negative", {"depth": depth})
    root = bst_root(gog)
    tree = nx.Graph(root=root.word)
    tree.add_node(root.word, vertex=root.vertex, depth=0, stabilizer=gog.vertex_groups[root.vertex].order)
    level = [root]
    for _ in range(depth):
        nxt = []
        for node in level:
            for label, child in bst_children(gog, node):
                tree.add_node(
                    child.word,
                    vertex=child.vertex,
                    depth=child.depth,
                    stabilizer=gog.vertex_groups[child.vertex].order,
                )
                tree.add_edge(node.word, child.word, label=label)
                nxt.append(child)
        level = nxt
    logger.info(f"🌳 Bass-Serre ball of depth {depth}: {tree.number_of_nodes()} nodes")
    return tree
