"""Plain graphs for cut and tree-decomposition tests."""
from typing import Tuple

import networkx as nx

from cuts import PathWindow


def _label(i: int, j: int) -> str:
    return f"{i},{j}"


def comb(width: int = 4, height: int = 4) -> nx.Graph:
    """
    A ladder i in [-width, width], j in {0, 1} with a spine (0, j), 2 <= j <= height.

    The ladder ends and the spine tip stand in for the sphere of a ball and
    carry the node attribute `sphere`.
    """
    graph = nx.Graph()
    for i in range(-width, width + 1):
        graph.add_edge(_label(i, 0), _label(i, 1))
        if i < width:
            graph.add_edge(_label(i, 0), _label(i + 1, 0))
            graph.add_edge(_label(i, 1), _label(i + 1, 1))
    for j in range(1, height):
        graph.add_edge(_label(0, j), _label(0, j + 1))
    for v in graph.nodes:
        graph.nodes[v]["sphere"] = False
    for end in (_label(-width, 0), _label(-width, 1), _label(width, 0), _label(width, 1), _label(0, height)):
        graph.nodes[end]["sphere"] = True
    return graph


def comb_windows(width: int = 4, height: int = 4) -> Tuple[PathWindow, PathWindow]:
    """
    alpha runs down the spine and right along j = 1; beta is the row j = 0.
    """
    alpha = [_label(0, j) for j in range(height, 0, -1)] + [_label(i, 1) for i in range(1, width + 1)]
    beta = [_label(i, 0) for i in range(-width, width + 1)]
    return PathWindow(tuple(alpha), label="alpha"), PathWindow(tuple(beta), label="beta")


def cycle(n: int) -> nx.Graph:
    return nx.relabel_nodes(nx.cycle_graph(n), {i: f"c{i}" for i in range(n)})


def cycle_with_spokes(n: int = 8) -> nx.Graph:
    """The n-cycle c0..c(n-1) with a pendant spoke s_i at every c_i."""
    graph = cycle(n)
    for i in range(n):
        graph.add_edge(f"c{i}", f"s{i}")
    return graph


def half_turn(n: int, start: int) -> frozenset:
    """Half of cycle_with_spokes(n): c_start .. c_(start + n/2 - 1) with their spokes."""
    half = [(start + i) % n for i in range(n // 2)]
    return frozenset([f"c{i}" for i in half] + [f"s{i}" for i in half])
