"""Minimal and optimal cuts relative to a family of path windows."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import networkx as nx

from config import settings
from .cut import Cut, enumerate_kcuts, is_nested
from .paths import PathWindow

logger = logging.getLogger(__name__)


def cuts_splitting_path(
    graph: nx.Graph,
    window: PathWindow,
    max_k: Optional[int] = None,
    universe: Optional[Sequence[Cut]] = None,
) -> List[Cut]:
    """The cuts of weight <= max_k splitting the window; their boundary meets the path."""
    max_k = settings.DEFAULT_MAX_CUT_WEIGHT if max_k is None else max_k
    if universe is None:
        universe = enumerate_kcuts(graph, window.vertices, max_k)
    return [c for c in universe if c.weight <= max_k and window.split_by(c)]


def minimal_cuts(splitting: Sequence[Cut]) -> List[Cut]:
    if not splitting:
        return []
    least = min(c.weight for c in splitting)
    return [c for c in splitting if c.weight == least]


def m_value(cut: Cut, k_cuts: Sequence[Cut]) -> int:
    """Number of k-cuts not nested with the cut; complements count once."""
    return sum(1 for d in k_cuts if not is_nested(cut, d))


@dataclass
class OptimalCuts:
    k: int
    radius: Optional[int]
    margin: Optional[int]
    universe: List[Cut]
    optimal: List[Cut]
    m_values: Dict[tuple, int] = field(default_factory=dict)
    minimal_weights: Dict[str, int] = field(default_factory=dict)

    @property
    def weights(self) -> List[int]:
        return sorted({c.weight for c in self.optimal})


def optimal_cuts(
    graph: nx.Graph,
    windows: Sequence[PathWindow],
    k: Optional[int] = None,
    max_k: Optional[int] = None,
    candidates: Optional[Sequence[Cut]] = None,
) -> OptimalCuts:
    """
    C_opt over the window family, closed under complement.

    k defaults to the largest minimal splitting weight over the windows.
    m is counted against the k-cuts whose vertex boundary meets the ball
    interior (vertices off the sphere).
    """
    max_k = settings.DEFAULT_MAX_CUT_WEIGHT if max_k is None else max_k
    radius = graph.graph.get("radius")
    path_vertices = {v for w in windows for v in w.vertices}
    if candidates is None:
        candidates = enumerate_kcuts(graph, path_vertices, max_k) if path_vertices else []

    minimal: Dict[str, List[Cut]] = {}
    for window in windows:
        found = minimal_cuts(cuts_splitting_path(graph, window, max_k, candidates))
        if found:
            minimal[window.label + "|" + "/".join(str(v) for v in window.vertices)] = found
    if not minimal:
        logger.warning("⚠️ no window is split by a cut; C_opt is empty")
        return OptimalCuts(k or 0, radius, windows[0].margin if windows else None, [], [])

    k = max(c[0].weight for c in minimal.values()) if k is None else k
    inside = [v for v, flag in graph.nodes(data="sphere", default=False) if not flag]
    universe = enumerate_kcuts(graph, inside, k)
    m_values = {}
    optimal: Dict[tuple, Cut] = {}
    for cuts in minimal.values():
        scores = []
        for c in cuts:
            if c.key not in m_values:
                m_values[c.key] = m_value(c, universe)
            scores.append(m_values[c.key])
        best = min(scores)
        for c, score in zip(cuts, scores):
            if score == best:
                optimal.setdefault(c.key, c)
                optimal.setdefault(c.complement().key, c.complement())
    cuts = [optimal[key] for key in sorted(optimal)]
    logger.info(f"🎯 {len(cuts)} optimal cuts (with complements), k = {k}, weights {sorted({c.weight for c in cuts})}")
    return OptimalCuts(
        k, radius, windows[0].margin, universe, cuts, m_values,
        {label: cs[0].weight for label, cs in minimal.items()},
    )
