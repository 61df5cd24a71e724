"""
Tree decompositions of Cayley balls from the components outside smaller balls.

The root bag is B_1. For every level n >= 1 and every connected component
C of ball - B_n there is a bag beta C: the endpoints of the edges leaving
C. A level-(n+1) bag hangs below the level-n bag of the component that
contains it. The construction stops at level radius - 1.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, List, Optional, Tuple

import networkx as nx

from formal_lang import Cfg, reduce_grammar, shortest_yields, to_cnf
from .decomposition import TdReport, TreeDecomposition, validate_td

logger = logging.getLogger(__name__)

ROOT = (0, 0)


def grammar_constant(grammar: Cfg) -> int:
    """k: the largest over CNF variables of the shortest terminal word each derives."""
    cnf = reduce_grammar(to_cnf(grammar))
    yields = shortest_yields(cnf)
    return max((len(w) for w in yields.values()), default=0)


@dataclass
class MullerSchuppResult:
    td: TreeDecomposition
    levels: int
    max_diameter: int
    interior_report: TdReport
    sphere_nodes: List[Tuple[int, int]] = field(default_factory=list)
    k: Optional[int] = None

    @property
    def within_bound(self) -> Optional[bool]:
        """max diameter <= 3k, or None without a grammar constant."""
        return None if self.k is None else self.max_diameter <= 3 * self.k


def _vertex_boundary(ball: nx.Graph, component: FrozenSet[Hashable]) -> FrozenSet[Hashable]:
    boundary = set()
    for v in component:
        for w in ball.neighbors(v):
            if w not in component:
                boundary.update((v, w))
    return frozenset(boundary)


def _diameter(bag: FrozenSet[Hashable], distances: Dict[Hashable, Dict[Hashable, int]]) -> int:
    members = sorted(bag, key=str)
    return max((distances[u][v] for i, u in enumerate(members) for v in members[i + 1:]), default=0)


def muller_schupp_td(ball: nx.Graph, k: Optional[int] = None) -> MullerSchuppResult:
    """
    Build the decomposition, validate it on the ball interior and measure
    bag diameters (ball distances). Bags meeting the sphere are flagged.
    """
    radius = ball.graph["radius"]
    origin = ball.graph["origin"]
    distance = dict(ball.nodes(data="distance"))
    tree = nx.Graph()
    bags: Dict[Tuple[int, int], FrozenSet[Hashable]] = {ROOT: frozenset(v for v, d in distance.items() if d <= 1)}
    tree.add_node(ROOT)

    # each vertex outside B_n points at the tree node of its level-n component
    owner: Dict[Hashable, Tuple[int, int]] = {v: ROOT for v in ball.nodes if v != origin}
    levels = 0
    for n in range(1, radius):
        outside = [v for v, d in distance.items() if d > n]
        components = sorted(
            (frozenset(c) for c in nx.connected_components(ball.subgraph(outside))),
            key=lambda c: min(str(v) for v in c),
        )
        if not components:
            break
        levels = n
        next_owner: Dict[Hashable, Tuple[int, int]] = {}
        for i, component in enumerate(components):
            node = (n, i)
            bags[node] = _vertex_boundary(ball, component)
            parent = owner[next(iter(component))]
            tree.add_edge(parent, node)
            for v in component:
                next_owner[v] = node
        owner = next_owner
    td = TreeDecomposition(tree, bags)

    inside = [v for v, d in distance.items() if d < radius]
    report = validate_td(ball, td, interior=inside)
    if not report.ok:
        logger.warning(f"⚠️ bags fail {report.axiom} on the interior: {report.message}")
    sphere_nodes = sorted(t for t, bag in bags.items() if any(distance[v] == radius for v in bag))
    if sphere_nodes:
        logger.warning(f"⚠️ {len(sphere_nodes)} bags touch the sphere; their shape may differ in the full graph")

    distances = dict(nx.all_pairs_shortest_path_length(ball))
    max_diameter = max((_diameter(bag, distances) for bag in bags.values()), default=0)
    logger.info(f"🌲 decomposition with {len(bags)} bags over {levels} levels, max bag diameter {max_diameter}")
    return MullerSchuppResult(td, levels, max_diameter, report, sphere_nodes, k)
