"""The equivalence of optimal cuts, the structure tree and its blocks."""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence

import networkx as nx
import numpy as np

from cayley_tw import TdReport, TreeDecomposition, neighbourhood, validate_td
from errors import ConstructionError
from .cut import Cut, is_nested

logger = logging.getLogger(__name__)


def _strict_inclusions(cuts: Sequence[Cut]) -> np.ndarray:
    n = len(cuts)
    strict = np.zeros((n, n), dtype=bool)
    for i, c in enumerate(cuts):
        for j, d in enumerate(cuts):
            strict[i, j] = c.side < d.side
    return strict


def tilde_relation(cuts: Sequence[Cut]) -> np.ndarray:
    """
    C ~ D iff C = D, or C̄ ⊊ D with no E among the cuts such that C̄ ⊊ E ⊊ D.

    Raises:
        ConstructionError: if the cuts are not closed under complement or
            the relation is not an equivalence.
    """
    index = {c.key: i for i, c in enumerate(cuts)}
    try:
        complement = [index[c.complement().key] for c in cuts]
    except KeyError:
        raise ConstructionError("optimal cuts must be closed under complement") from None
    strict = _strict_inclusions(cuts)
    n = len(cuts)
    relation = np.eye(n, dtype=bool)
    for i in range(n):
        below = strict[complement[i]]
        for j in np.flatnonzero(below):
            between = below & strict[:, j]
            relation[i, j] = not between.any()
    if not (relation == relation.T).all():
        raise ConstructionError("the cut relation is not symmetric")
    closure = relation.astype(np.int64) @ relation.astype(np.int64) > 0
    if (closure & ~relation).any():
        i, j = map(int, np.argwhere(closure & ~relation)[0])
        raise ConstructionError("the cut relation is not transitive",
                                {"first": cuts[i].describe(), "second": cuts[j].describe()})
    return relation


def tilde_classes(cuts: Sequence[Cut]) -> List[List[int]]:
    """Classes as lists of cut indices, ordered by their least member."""
    relation = tilde_relation(cuts)
    seen = set()
    classes = []
    for i in range(len(cuts)):
        if i in seen:
            continue
        members = [int(j) for j in np.flatnonzero(relation[i])]
        seen.update(members)
        classes.append(members)
    return classes


@dataclass
class StructureTree:
    """Vertices are ~-classes; each optimal cut C is the edge from [C] to [C̄]."""
    cuts: List[Cut]
    classes: List[List[int]]
    class_of: List[int]
    graph: nx.Graph

    def class_cuts(self, class_id: int) -> List[Cut]:
        return [self.cuts[i] for i in self.classes[class_id]]


def structure_tree(cuts: Sequence[Cut]) -> StructureTree:
    """
    Raises:
        ConstructionError: if two optimal cuts cross or the graph is not a tree.
    """
    cuts = list(cuts)
    for i, c in enumerate(cuts):
        for d in cuts[i + 1:]:
            if not is_nested(c, d):
                raise ConstructionError("optimal cuts must be pairwise nested",
                                        {"first": c.describe(), "second": d.describe()})
    classes = tilde_classes(cuts)
    class_of = [0] * len(cuts)
    for cid, members in enumerate(classes):
        for i in members:
            class_of[i] = cid
    index = {c.key: i for i, c in enumerate(cuts)}
    tree = nx.Graph()
    tree.add_nodes_from(range(len(classes)))
    for i, c in enumerate(cuts):
        s, t = class_of[i], class_of[index[c.complement().key]]
        if s == t:
            raise ConstructionError("a cut and its complement fall into one class", {"cut": c.describe()})
        if tree.has_edge(s, t) and tree.edges[s, t]["cut"] not in (i, index[c.complement().key]):
            raise ConstructionError("two cuts join the same pair of classes", {"cut": c.describe()})
        if not tree.has_edge(s, t):
            tree.add_edge(s, t, cut=i, weight=c.weight)
    if tree.number_of_nodes() and not nx.is_tree(tree):
        raise ConstructionError("the structure graph is not a tree",
                                {"vertices": tree.number_of_nodes(), "edges": tree.number_of_edges()})
    logger.info(f"🌳 structure tree: {tree.number_of_nodes()} classes, {tree.number_of_edges()} edges")
    return StructureTree(cuts, classes, class_of, tree)


def choose_lambda(graph: nx.Graph, cuts: Sequence[Cut], limit: Optional[int] = None) -> int:
    """
    The least lambda >= 1 making N^lambda(C) ∩ C̄ connected for every cut.

    Raises:
        ConstructionError: if no lambda up to the limit works.
    """
    limit = limit or max(1, graph.number_of_nodes())
    for ell in range(1, limit + 1):
        if all(nx.is_connected(graph.subgraph(neighbourhood(graph, c.side, ell) & c.other)) for c in cuts):
            logger.debug(f"lambda = {ell}")
            return ell
    raise ConstructionError(f"no lambda <= {limit} connects every N^lambda(C) ∩ C̄")


@dataclass
class Block:
    class_id: int
    vertices: FrozenSet[Hashable]
    cuts: int
    connected: bool
    touches_sphere: bool

    @property
    def size(self) -> int:
        return len(self.vertices)


def block(graph: nx.Graph, class_cuts: Sequence[Cut], ell: int) -> FrozenSet[Hashable]:
    """
    B[C] as the intersection of the neighbourhoods N^ell(D) over the class,
    checked against the union ∩D ∪ ⋃(N^ell(D) ∩ D̄).
    """
    grown = [neighbourhood(graph, d.side, ell) for d in class_cuts]
    by_intersection = frozenset.intersection(*grown)
    core = frozenset.intersection(*(d.side for d in class_cuts))
    by_union = core.union(*(n & d.other for n, d in zip(grown, class_cuts)))
    if by_intersection != by_union:
        raise ConstructionError("the two block formulas disagree", {
            "only_intersection": sorted(by_intersection - by_union, key=str),
            "only_union": sorted(by_union - by_intersection, key=str),
        })
    return by_intersection


def blocks(graph: nx.Graph, tree: StructureTree, ell: int) -> List[Block]:
    on_sphere = {v for v, flag in graph.nodes(data="sphere", default=False) if flag}
    out = []
    for cid in range(len(tree.classes)):
        members = tree.class_cuts(cid)
        vertices = block(graph, members, ell)
        connected = bool(vertices) and nx.is_connected(graph.subgraph(vertices))
        out.append(Block(cid, vertices, len(members), connected, bool(vertices & on_sphere)))
    sizes = sorted({b.size for b in out if not b.touches_sphere})
    logger.info(f"🧱 {len(out)} blocks at lambda = {ell}; sizes away from the sphere: {sizes}")
    return out


def blocks_tree_decomposition(graph: nx.Graph, tree: StructureTree, block_list: Sequence[Block]) -> TreeDecomposition:
    return TreeDecomposition(tree.graph.copy(), {b.class_id: b.vertices for b in block_list})


def validate_blocks(graph: nx.Graph, td: TreeDecomposition) -> TdReport:
    """Validate on the ball interior when the graph is a ball."""
    radius = graph.graph.get("radius")
    if radius is None:
        return validate_td(graph, td)
    inside = [v for v, d in graph.nodes(data="distance") if d < radius]
    return validate_td(graph, td, interior=inside)
