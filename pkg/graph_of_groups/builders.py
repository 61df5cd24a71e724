"""Amalgams, HNN extensions and free groups as graphs of groups."""
import logging
from typing import Optional, Sequence

from finite_groups import FiniteGroup, trivial_group
from .group import EdgeSpec, GraphOfGroups

logger = logging.getLogger(__name__)


def amalgam(
    left: FiniteGroup,
    right: FiniteGroup,
    common: Optional[FiniteGroup] = None,
    into_left: Optional[Sequence[int]] = None,
    into_right: Optional[Sequence[int]] = None,
    edge: str = "y",
    vertices: Sequence[str] = ("P", "Q"),
) -> GraphOfGroups:
    """
    left *_common right: two vertices joined by one edge.

    Without `common` the edge group is trivial and the result is the free
    product.
    """
    if common is None:
        common, into_left, into_right = trivial_group(), (0,), (0,)
    p, q = vertices
    declared = EdgeSpec(edge, p, q, common, tuple(into_left), tuple(into_right))
    return GraphOfGroups({p: left, q: right}, [declared], base=p)


def hnn(
    group: FiniteGroup,
    associated: FiniteGroup,
    first: Sequence[int],
    second: Sequence[int],
    edge: str = "y",
    vertex: str = "P",
) -> GraphOfGroups:
    """One vertex with a loop y: y~ a^first y = a^second for a in the associated group."""
    declared = EdgeSpec(edge, vertex, vertex, associated, tuple(first), tuple(second))
    return GraphOfGroups({vertex: group}, [declared], base=vertex)


def free_gog(rank: int, vertex: str = "P", prefix: str = "y") -> GraphOfGroups:
    """The free group of the given rank: a trivial vertex with loops y1, ..., y_rank."""
    trivial = trivial_group()
    specs = [EdgeSpec(f"{prefix}{i}", vertex, vertex, trivial, (0,), (0,)) for i in range(1, rank + 1)]
    return GraphOfGroups({vertex: trivial}, specs, base=vertex)
