"""Built-in graphs of groups."""
import logging
from typing import Callable, Dict, List

from errors import InputError
from finite_groups import cyclic
from graph_of_groups import GraphOfGroups, amalgam, free_gog, hnn

logger = logging.getLogger(__name__)


def psl2z() -> GraphOfGroups:
    """Z/2 * Z/3, the modular group: P = <a>, Q = <b>, trivial edge y."""
    return amalgam(cyclic(2, "a"), cyclic(3, "b"))


def zxz2() -> GraphOfGroups:
    """Z x Z/2 as the HNN extension of <a | a^2> over itself with identity maps."""
    return hnn(cyclic(2, "a"), cyclic(2), (0, 1), (0, 1))


def dihedral() -> GraphOfGroups:
    """The infinite dihedral group Z/2 * Z/2 = <a> * <b>."""
    return amalgam(cyclic(2, "a"), cyclic(2, "b"))


def free2() -> GraphOfGroups:
    """F2 on the loops y1, y2 at a trivial vertex."""
    return free_gog(2)


# Registry of built-in graphs of groups
BUILTIN_GOGS: Dict[str, Callable[[], GraphOfGroups]] = {
    "psl2z": psl2z,
    "zxz2": zxz2,
    "dihedral": dihedral,
    "free2": free2,
}


def builtin_gog(name: str) -> GraphOfGroups:
    """
    Raises:
        InputError: if no built-in graph of groups has that name.
    """
    if name not in BUILTIN_GOGS:
        raise InputError(f"unknown built-in {name!r}; available: {sorted(BUILTIN_GOGS)}", {"name": name})
    logger.debug(f"Loading built-in graph of groups {name}")
    return BUILTIN_GOGS[name]()


def builtin_names() -> List[str]:
    return sorted(BUILTIN_GOGS)
