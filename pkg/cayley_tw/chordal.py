"""Perfect elimination orderings, clique trees and chordal generating sets."""
import logging
from itertools import product
from typing import Dict, Hashable, List, Optional, Sequence, Set

import networkx as nx

from errors import ConstructionError
from graph_of_groups import GraphOfGroups
from rewrite import Word
from .ball import cayley_ball, interior
from .decomposition import TreeDecomposition, validate_td
from .oracles import GogOracle

logger = logging.getLogger(__name__)


def _is_clique(graph: nx.Graph, vertices: Set[Hashable]) -> bool:
    members = sorted(vertices, key=str)
    return all(graph.has_edge(u, v) for i, u in enumerate(members) for v in members[i + 1:])


def perfect_elimination_ordering(graph: nx.Graph) -> Optional[List[Hashable]]:
    """
    Repeatedly remove the least simplicial vertex.

    Returns None when some stage has no simplicial vertex, i.e. the graph
    is not chordal.
    """
    remaining = set(graph.nodes)
    order: List[Hashable] = []
    candidates = sorted(remaining, key=str)
    while remaining:
        for v in candidates:
            if v in remaining and _is_clique(graph, set(graph.neighbors(v)) & remaining):
                break
        else:
            return None
        order.append(v)
        remaining.discard(v)
    return order


def is_chordal(graph: nx.Graph) -> bool:
    return perfect_elimination_ordering(graph) is not None


def clique_tree(graph: nx.Graph) -> TreeDecomposition:
    """
    A tree decomposition whose bags are the maximal cliques of a chordal graph.

    Vertices are added back in reverse elimination order: if the later
    neighbourhood of v is a whole bag, v joins it; otherwise v starts a new
    bag hanging off a bag that contains its later neighbourhood.

    Raises:
        ConstructionError: if the graph is not chordal or the result fails validation.
    """
    order = perfect_elimination_ordering(graph)
    if order is None:
        raise ConstructionError("graph is not chordal: no perfect elimination ordering")
    position = {v: i for i, v in enumerate(order)}
    tree = nx.Graph()
    bags: Dict[int, frozenset] = {}
    for v in reversed(order):
        later = frozenset(w for w in graph.neighbors(v) if position[w] > position[v])
        host = next((t for t in sorted(bags) if later <= bags[t]), None)
        if host is not None and bags[host] == later:
            bags[host] = later | {v}
            continue
        node = len(bags)
        bags[node] = later | {v}
        tree.add_node(node)
        if host is not None:
            tree.add_edge(host, node)
        elif node > 0:
            tree.add_edge(0, node)
    td = TreeDecomposition(tree, bags)
    for t, bag in bags.items():
        if not _is_clique(graph, set(bag)):
            raise ConstructionError(f"clique-tree bag {t} is not a clique", {"bag": sorted(bag, key=str)})
    report = validate_td(graph, td)
    if not report.ok:
        raise ConstructionError(f"clique tree is not a tree decomposition: {report.message}", report.witness)
    logger.debug(f"clique tree: {len(bags)} bags, bag-size {td.bag_size}")
    return td


def _representative_bags(gog: GraphOfGroups) -> List[List[Word]]:
    """
    One bag per orbit of the decomposition along the Bass-Serre tree:
    G_P for each vertex and G_y^y together with G_y^y y for each edge off
    the spanning tree (tree edges are trivial and their bags lie in G_P).
    """
    bags: List[List[Word]] = []
    for vertex in gog.vertices:
        group = gog.vertex_groups[vertex]
        bags.append([gog.element_letter(vertex, g) for g in group.elements()])
    for y in gog.edge_letters:
        if y in gog.spanning_tree:
            continue
        edge = gog.edges[y]
        image = [gog.element_letter(edge.source, edge.embedding[h]) for h in edge.group.elements()]
        bags.append(image + [a + (y,) for a in image])
    return bags


def _grow(oracle: GogOracle, bag: List[Word], ell: int, steps: Sequence[Word]) -> List[Word]:
    seen = {oracle.key(w): w for w in bag}
    frontier = list(seen.values())
    for _ in range(ell):
        nxt = []
        for w, s in product(frontier, steps):
            k = oracle.key(w + s)
            if k not in seen:
                seen[k] = w + s
                nxt.append(w + s)
        frontier = nxt
    return list(seen.values())


def extend_generators_for_chordality(
    gog: GraphOfGroups,
    generators: Optional[Sequence[Sequence[str]]] = None,
    radius: int = 4,
) -> List[Word]:
    """
    Add generators until every representative bag is a clique.

    When a generator is longer than one letter the bags are first grown
    to their neighbourhoods of that radius in the standard Cayley graph so
    every generator edge lies in a bag. Raises ConstructionError if the
    ball with the extended set is not chordal.
    """
    oracle = GogOracle(gog, generators)
    standard = GogOracle(gog)
    extended: List[Word] = list(oracle.generators)
    keys = {oracle.key(s) for s in oracle.symmetric_generators()} | {oracle.key(())}
    longest = max((len(s) for s in extended), default=1)
    ell = longest if longest > 1 else 0

    for bag in _representative_bags(gog):
        members = _grow(standard, bag, ell, standard.symmetric_generators())
        for x, x2 in product(members, members):
            step = gog.britton_reduce(gog.inverse_word(x) + x2)
            k = oracle.key(step)
            if k in keys:
                continue
            keys |= {k, oracle.key(gog.inverse_word(step))}
            extended.append(step)
            logger.debug(f"added generator {' '.join(step)}")

    ball = cayley_ball(GogOracle(gog, extended), radius)
    if not is_chordal(interior(ball)):
        raise ConstructionError("extended generating set does not give a chordal ball", {"generators": [list(s) for s in extended]})
    logger.info(f"🔺 chordal generating set: {len(extended)} generators ({len(extended) - len(oracle.generators)} added)")
    return extended
