"""Exact treewidth of small graphs by searching elimination orderings."""
import logging
from typing import Dict, List, Optional, Set

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_degree

from config import settings
from errors import UsageError

logger = logging.getLogger(__name__)


class _Search:
    """Bitmask elimination search for a fixed width bound."""

    def __init__(self, graph: nx.Graph):
        self.vertices = sorted(graph.nodes, key=str)
        index = {v: i for i, v in enumerate(self.vertices)}
        self.n = len(self.vertices)
        self.full = (1 << self.n) - 1
        self.adjacency = [0] * self.n
        for u, v in graph.edges:
            self.adjacency[index[u]] |= 1 << index[v]
            self.adjacency[index[v]] |= 1 << index[u]
        self.failed: Set[int] = set()

    def q_size(self, eliminated: int, v: int) -> int:
        """Vertices outside eliminated + v reachable from v through eliminated vertices."""
        inside = eliminated | (1 << v)
        component = 1 << v
        frontier = component
        reach = 0
        while frontier:
            nxt = 0
            bits = frontier
            while bits:
                low = bits & -bits
                i = low.bit_length() - 1
                bits ^= low
                nxt |= self.adjacency[i]
            reach |= nxt & ~inside
            frontier = nxt & eliminated & ~component
            component |= frontier
        return bin(reach).count("1")

    def feasible(self, eliminated: int, width: int) -> bool:
        if eliminated == self.full:
            return True
        if eliminated in self.failed:
            return False
        for v in range(self.n):
            if eliminated >> v & 1:
                continue
            if self.q_size(eliminated, v) <= width and self.feasible(eliminated | (1 << v), width):
                return True
        self.failed.add(eliminated)
        return False


def treewidth_upper_bound(graph: nx.Graph) -> int:
    if graph.number_of_nodes() == 0:
        return -1
    width, _ = treewidth_min_degree(graph)
    return width


def treewidth_exact(graph: nx.Graph, limit: Optional[int] = None) -> int:
    """
    Treewidth by testing widths upward from a degree lower bound.

    Raises:
        UsageError: for graphs with more vertices than the limit.
    """
    limit = settings.TREEWIDTH_MAX_VERTICES if limit is None else limit
    n = graph.number_of_nodes()
    if n > limit:
        raise UsageError(f"exact treewidth is limited to {limit} vertices, got {n}", {"vertices": n, "limit": limit})
    if n == 0:
        return -1
    if graph.number_of_edges() == 0:
        return 0
    upper = treewidth_upper_bound(graph)
    lower = max(1, min(d for _, d in graph.degree if d > 0))
    for width in range(lower, upper):
        if _Search(graph).feasible(0, width):
            logger.debug(f"treewidth {width} (upper bound was {upper})")
            return width
    return upper


def grid_graph(side: int) -> nx.Graph:
    """side x side grid with vertices labelled 'i,j'."""
    grid = nx.grid_2d_graph(side, side)
    return nx.relabel_nodes(grid, {(i, j): f"{i},{j}" for i, j in grid.nodes})


def complete_graph(size: int) -> nx.Graph:
    return nx.relabel_nodes(nx.complete_graph(size), {i: str(i) for i in range(size)})
