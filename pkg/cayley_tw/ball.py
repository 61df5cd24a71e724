"""Balls in Cayley graphs by breadth-first search over canonical keys."""
import logging
from typing import Dict, Hashable, Optional

import networkx as nx

from config import settings
from errors import InputError
from rewrite import Word
from .oracles import GroupOracle

logger = logging.getLogger(__name__)


def cayley_ball(oracle: GroupOracle, radius: Optional[int] = None) -> nx.Graph:
    """
    The ball of the given radius around 1, as an induced simple graph.

    Vertices are labels of canonical keys. Node attributes: `word` (a
    shortest word reaching the vertex), `distance` and `sphere` (distance
    equals the radius). Edge attribute `generator` names one generator
    joining the endpoints. Graph attributes: `radius`, `origin`.
    """
    radius = settings.DEFAULT_RADIUS if radius is None else radius
    if radius < 0:
        raise InputError("radius must be non-negative", {"radius": radius})
    generators = oracle.symmetric_generators()
    origin = oracle.label(())
    graph = nx.Graph(radius=radius, origin=origin)
    graph.add_node(origin, word=(), distance=0, sphere=radius == 0)
    words: Dict[Hashable, Word] = {origin: ()}
    frontier = [origin]
    for distance in range(1, radius + 1):
        next_frontier = []
        for label in frontier:
            word = words[label]
            for s in generators:
                target_word = word + s
                target = oracle.label(target_word)
                if target not in words:
                    words[target] = target_word
                    graph.add_node(target, word=target_word, distance=distance, sphere=distance == radius)
                    next_frontier.append(target)
                if not graph.has_edge(label, target):
                    graph.add_edge(label, target, generator=" ".join(s))
        frontier = next_frontier
        logger.debug(f"sphere {distance}: {len(frontier)} vertices")

    # edges between sphere vertices
    for label in frontier:
        for s in generators:
            target = oracle.label(words[label] + s)
            if target in words and not graph.has_edge(label, target):
                graph.add_edge(label, target, generator=" ".join(s))
    logger.info(f"🔵 ball of radius {radius} for {oracle.name}: {graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges")
    return graph


def interior(ball: nx.Graph) -> nx.Graph:
    """Induced subgraph on the vertices strictly inside the sphere."""
    radius = ball.graph["radius"]
    keep = [v for v, d in ball.nodes(data="distance") if d < radius]
    sub = ball.subgraph(keep).copy()
    sub.graph["radius"] = radius - 1
    return sub


def sphere(ball: nx.Graph) -> frozenset:
    return frozenset(v for v, on in ball.nodes(data="sphere") if on)
