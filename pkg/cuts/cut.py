"""Cuts of finite graphs and enumeration of cuts of bounded weight."""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Set, Tuple

import networkx as nx

from config import settings
from errors import InputError

logger = logging.getLogger(__name__)

EdgeKey = Tuple[Hashable, Hashable]


def edge_key(u: Hashable, v: Hashable) -> EdgeKey:
    return (u, v) if str(u) <= str(v) else (v, u)


@dataclass(frozen=True)
class Cut:
    """
    A side C of a cut in a finite host graph.

    Both C and its complement are non-empty and connected. A side is
    flagged infinite when it holds a vertex marked `sphere` in the host.
    """
    side: FrozenSet[Hashable]
    other: FrozenSet[Hashable]
    boundary: FrozenSet[EdgeKey]
    infinite: bool
    other_infinite: bool

    @property
    def weight(self) -> int:
        return len(self.boundary)

    @property
    def vertex_boundary(self) -> FrozenSet[Hashable]:
        return frozenset(v for e in self.boundary for v in e)

    def complement(self) -> "Cut":
        return Cut(self.other, self.side, self.boundary, self.other_infinite, self.infinite)

    @property
    def key(self) -> Tuple[Tuple[str, ...], str]:
        """Sorted edge boundary and the least vertex of the side."""
        edges = tuple(sorted(f"{u}|{v}" for u, v in self.boundary))
        return edges, min(str(v) for v in self.side)

    def describe(self) -> str:
        edges = ", ".join(f"{u}-{v}" for u, v in sorted(self.boundary, key=lambda e: (str(e[0]), str(e[1]))))
        return f"cut of weight {self.weight} [{edges}] side of {len(self.side)} vertices"


def edge_boundary(graph: nx.Graph, side: Iterable[Hashable]) -> FrozenSet[EdgeKey]:
    members = set(side)
    return frozenset(edge_key(u, v) for u, v in nx.edge_boundary(graph, members))


def is_cut_side(graph: nx.Graph, side: Iterable[Hashable]) -> bool:
    members = frozenset(side)
    rest = frozenset(graph.nodes) - members
    if not members or not rest:
        return False
    return nx.is_connected(graph.subgraph(members)) and nx.is_connected(graph.subgraph(rest))


def cut_from_side(graph: nx.Graph, side: Iterable[Hashable]) -> Cut:
    """
    Raises:
        InputError: if the side or its complement is empty or disconnected.
    """
    members = frozenset(side)
    if not is_cut_side(graph, members):
        raise InputError("a cut needs a non-empty connected side with a non-empty connected complement",
                         {"side": sorted(members, key=str)})
    rest = frozenset(graph.nodes) - members
    on_sphere = {v for v, flag in graph.nodes(data="sphere", default=False) if flag}
    return Cut(members, rest, edge_boundary(graph, members), bool(members & on_sphere), bool(rest & on_sphere))


def canonical(graph: nx.Graph, cut: Cut) -> Cut:
    """Orient the cut so the side holds the least vertex of the graph."""
    anchor = min(graph.nodes, key=str)
    return cut if anchor in cut.side else cut.complement()


def corners(c: Cut, d: Cut) -> Tuple[FrozenSet[Hashable], ...]:
    """C∩D, C∩D̄, C̄∩D, C̄∩D̄ in this order."""
    return (c.side & d.side, c.side & d.other, c.other & d.side, c.other & d.other)


def is_nested(c: Cut, d: Cut) -> bool:
    """Nested iff some corner is empty."""
    return any(not corner for corner in corners(c, d))


def _bonds_through(graph: nx.Graph, seed: EdgeKey, k: int) -> Set[FrozenSet[Hashable]]:
    """
    Sides of minimal edge cuts of weight <= k containing the seed edge.

    A bridge is a cut on its own. Otherwise any such cut meets every path
    joining the seed's endpoints outside the removed edges, so branch over
    the edges of one such path with one unit less budget.
    """
    u, v = seed
    sides: Set[FrozenSet[Hashable]] = set()
    visited: Set[FrozenSet[EdgeKey]] = set()

    def search(removed: FrozenSet[EdgeKey], budget: int) -> None:
        if removed in visited:
            return
        visited.add(removed)
        rest = nx.restricted_view(graph, [], [e for e in removed])
        try:
            path = nx.shortest_path(rest, u, v)
        except nx.NetworkXNoPath:
            sides.add(frozenset(nx.node_connected_component(rest, u)))
            return
        if budget == 0:
            return
        for a, b in zip(path, path[1:]):
            search(removed | {edge_key(a, b)}, budget - 1)

    search(frozenset({seed}), k - 1)
    return sides


def enumerate_kcuts(graph: nx.Graph, seeds: Optional[Iterable[Hashable]] = None, k: Optional[int] = None) -> List[Cut]:
    """
    All cuts of weight <= k whose vertex boundary meets the seed set.

    Cuts are returned once per edge boundary, oriented to contain the
    least vertex of the graph, in canonical order.
    """
    k = settings.DEFAULT_MAX_CUT_WEIGHT if k is None else k
    if k < 1:
        raise InputError("cut weight bound must be positive", {"k": k})
    targets = set(graph.nodes) if seeds is None else set(seeds)
    seed_edges = sorted({edge_key(a, b) for a in targets if a in graph for b in graph.neighbors(a)},
                        key=lambda e: (str(e[0]), str(e[1])))
    found: Dict[Tuple, Cut] = {}
    for seed in seed_edges:
        for side in _bonds_through(graph, seed, k):
            if not is_cut_side(graph, side):
                continue
            cut = canonical(graph, cut_from_side(graph, side))
            if cut.weight <= k:
                found.setdefault(cut.key, cut)
    cuts = [found[key] for key in sorted(found)]
    logger.info(f"✂️ {len(cuts)} cuts of weight <= {k} meeting {len(targets)} seed vertices")
    return cuts
