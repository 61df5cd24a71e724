"""Tree decompositions: validation, normalization and neighbourhood bags."""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple

import networkx as nx

from errors import ConstructionError, InputError

logger = logging.getLogger(__name__)


@dataclass
class TreeDecomposition:
    """A tree and a bag of graph vertices at every tree node."""
    tree: nx.Graph
    bags: Dict[Hashable, FrozenSet[Hashable]]

    def __post_init__(self):
        missing = [t for t in self.tree.nodes if t not in self.bags]
        if missing or len(self.bags) != self.tree.number_of_nodes():
            raise InputError("every tree node needs exactly one bag", {"missing": missing})

    @property
    def bag_size(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0)

    def nodes_containing(self, v: Hashable) -> List[Hashable]:
        return [t for t, bag in self.bags.items() if v in bag]

    def restrict(self, vertices: Iterable[Hashable]) -> "TreeDecomposition":
        keep = frozenset(vertices)
        return TreeDecomposition(self.tree.copy(), {t: bag & keep for t, bag in self.bags.items()})

    def copy(self) -> "TreeDecomposition":
        return TreeDecomposition(self.tree.copy(), dict(self.bags))


@dataclass
class TdReport:
    ok: bool
    bag_size: int
    axiom: Optional[str] = None
    message: str = ""
    witness: Dict[str, Any] = field(default_factory=dict)

    def describe(self) -> str:
        if self.ok:
            return f"tree decomposition: OK (T1-T3), bag-size {self.bag_size}"
        return f"tree decomposition violates {self.axiom}: {self.message}"


def single_bag(graph: nx.Graph) -> TreeDecomposition:
    tree = nx.Graph()
    tree.add_node(0)
    return TreeDecomposition(tree, {0: frozenset(graph.nodes)})


def path_decomposition(graph: nx.Graph, order: List[Hashable]) -> TreeDecomposition:
    """Bags {v_i, v_i+1} along a path graph listed in order."""
    tree = nx.path_graph(max(len(order) - 1, 1))
    if len(order) == 1:
        return TreeDecomposition(tree, {0: frozenset(order)})
    return TreeDecomposition(tree, {i: frozenset(order[i:i + 2]) for i in range(len(order) - 1)})


def validate_td(graph: nx.Graph, td: TreeDecomposition, interior: Optional[Iterable[Hashable]] = None) -> TdReport:
    """
    Check (T1)-(T3), optionally on the subgraph induced by `interior`.

    T1: the bags cover every vertex. T2: every edge lies in a bag.
    T3: the nodes whose bags contain a vertex span a subtree.
    """
    if interior is not None:
        keep = frozenset(interior)
        graph = graph.subgraph(keep)
        td = td.restrict(keep)
    size = td.bag_size
    if td.tree.number_of_nodes() == 0 or not nx.is_tree(td.tree):
        return TdReport(False, size, "tree", "the underlying graph is not a tree")

    covered = set().union(*td.bags.values()) if td.bags else set()
    for v in sorted(graph.nodes, key=str):
        if v not in covered:
            return TdReport(False, size, "T1", f"vertex {v} is in no bag", {"vertex": v})

    for u, v in sorted(graph.edges, key=lambda e: (str(e[0]), str(e[1]))):
        if not any(u in bag and v in bag for bag in td.bags.values()):
            return TdReport(False, size, "T2", f"edge {u} - {v} is in no bag", {"edge": [u, v]})

    for v in sorted(graph.nodes, key=str):
        nodes = td.nodes_containing(v)
        if not nx.is_connected(td.tree.subgraph(nodes)):
            return TdReport(False, size, "T3", f"bags containing {v} do not form a subtree", {"vertex": v, "nodes": nodes})
    return TdReport(True, size)


def _contract(td: TreeDecomposition, gone: Hashable, into: Hashable) -> None:
    for t in list(td.tree.neighbors(gone)):
        if t != into:
            td.tree.add_edge(into, t)
    td.tree.remove_node(gone)
    td.bags[into] = td.bags[into] | td.bags.pop(gone)


def normalize_td(graph: nx.Graph, td: TreeDecomposition) -> TreeDecomposition:
    """
    Drop empty bags and contract every tree edge whose bags are comparable.

    Bag-size never grows; afterwards adjacent bags are incomparable and,
    for a connected graph, intersect.
    """
    out = td.copy()
    changed = True
    while changed and out.tree.number_of_nodes() > 1:
        changed = False
        for s, t in sorted(out.tree.edges, key=lambda e: (str(e[0]), str(e[1]))):
            if out.bags[s] <= out.bags[t]:
                _contract(out, s, t)
            elif out.bags[t] <= out.bags[s]:
                _contract(out, t, s)
            else:
                continue
            changed = True
            break
    report = validate_td(graph, out)
    if not report.ok:
        raise ConstructionError(f"normalization broke the decomposition: {report.message}", report.witness)
    logger.debug(f"normalized tree decomposition: {td.tree.number_of_nodes()} -> {out.tree.number_of_nodes()} nodes")
    return out


def neighbourhood(graph: nx.Graph, vertices: FrozenSet[Hashable], ell: int) -> FrozenSet[Hashable]:
    reached = set(vertices)
    frontier = set(vertices)
    for _ in range(ell):
        frontier = {w for v in frontier for w in graph.neighbors(v)} - reached
        reached |= frontier
    return frozenset(reached)


def neighbourhood_bound(size: int, max_degree: int, ell: int) -> int:
    """|N^ell(X)| <= |X| * sum_{i <= ell} d^i."""
    return size * sum(max_degree ** i for i in range(ell + 1))


def neighborhood_td(graph: nx.Graph, td: TreeDecomposition, ell: int) -> TreeDecomposition:
    """Replace every bag X by its ell-neighbourhood; still a tree decomposition."""
    if ell < 0:
        raise InputError("neighbourhood radius must be non-negative", {"ell": ell})
    if ell == 0:
        return td.copy()
    max_degree = max((d for _, d in graph.degree), default=0)
    bags = {}
    for t, bag in td.bags.items():
        grown = neighbourhood(graph, bag, ell)
        if len(grown) > neighbourhood_bound(len(bag), max_degree, ell):
            raise ConstructionError("neighbourhood bag exceeds the degree bound", {"node": t, "size": len(grown)})
        bags[t] = grown
    return TreeDecomposition(td.tree.copy(), bags)


def maximal_cliques_covered(graph: nx.Graph, td: TreeDecomposition) -> Tuple[bool, Optional[List[Hashable]]]:
    """Whether every maximal clique lies inside one bag; returns a missed clique otherwise."""
    bags = list(td.bags.values())
    for clique in nx.find_cliques(graph):
        members = frozenset(clique)
        if not any(members <= bag for bag in bags):
            return False, sorted(members, key=str)
    return True, None


def adjacent_bags_intersect(td: TreeDecomposition) -> bool:
    return all(td.bags[s] & td.bags[t] for s, t in td.tree.edges)
