"""
Resolve command inputs: files on disk or `builtin:NAME` references.

Graphs of groups, rewriting systems, automata and grammars have built-in
names; Cayley-graph commands also accept `free:a,b` for a free group.
"""
import logging
from pathlib import Path
from typing import Optional, Sequence, Tuple

import networkx as nx

from cayley_tw import (
    FiniteGroupOracle,
    FreeGroupOracle,
    GogOracle,
    GroupOracle,
    PregroupOracle,
    TreeDecomposition,
    cayley_ball,
    parse_graph,
    parse_td,
)
from errors import InputError
from finite_groups import parse_group
from fixtures import AUTOMATA, BUILTIN_GOGS, GRAMMARS, builtin_gog, comb, cycle_with_spokes
from formal_lang import Cfg, Nfa, Pda, parse_automaton, parse_grammar, parse_pda
from graph_of_groups import GraphOfGroups, parse_gog
from pregroups import Pregroup, parse_pregroup, pregroup_from_gog
from rewrite import SemiThueSystem, Word, dyck_system, free_group_system, parse_system

logger = logging.getLogger(__name__)

BUILTIN_PREFIX = "builtin:"
FREE_PREFIX = "free:"

GRAPHS = {
    "comb": comb,
    "cycle_with_spokes": cycle_with_spokes,
}


def _builtin(ref: str) -> Optional[str]:
    return ref[len(BUILTIN_PREFIX):] if ref.startswith(BUILTIN_PREFIX) else None


def read_text(path: str) -> str:
    """
    Raises:
        InputError: if the file cannot be read.
    """
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}", {"path": path}) from e


def _unknown(kind: str, name: str, available: Sequence[str]) -> InputError:
    return InputError(f"unknown built-in {kind} {name!r}; available: {sorted(available)}", {"name": name})


def load_gog(ref: str) -> GraphOfGroups:
    name = _builtin(ref)
    if name is not None:
        return builtin_gog(name)
    return parse_gog(read_text(ref), source=ref)


def load_pregroup(ref: str) -> Pregroup:
    """A pregroup file, or the pregroup of a built-in graph of groups."""
    name = _builtin(ref)
    if name is not None:
        return pregroup_from_gog(builtin_gog(name)).pregroup
    return parse_pregroup(read_text(ref), source=ref)


def load_system(ref: str) -> SemiThueSystem:
    """Files, `builtin:dyck`, `builtin:free2`, or S_G of any built-in graph of groups."""
    name = _builtin(ref)
    if name is None:
        return parse_system(read_text(ref), source=ref)
    if name == "dyck":
        return dyck_system()
    if name == "free2":
        return free_group_system(["a", "b"])
    if name in BUILTIN_GOGS:
        return builtin_gog(name).sg_system
    raise _unknown("system", name, ["dyck", "free2", *BUILTIN_GOGS])


def load_automaton(ref: str) -> Nfa:
    name = _builtin(ref)
    if name is None:
        return parse_automaton(read_text(ref), source=ref)
    if name not in AUTOMATA:
        raise _unknown("automaton", name, AUTOMATA)
    return AUTOMATA[name]()


def load_grammar(ref: str) -> Cfg:
    name = _builtin(ref)
    if name is None:
        return parse_grammar(read_text(ref), source=ref)
    if name not in GRAMMARS:
        raise _unknown("grammar", name, GRAMMARS)
    return GRAMMARS[name]()


def load_pda(ref: str) -> Pda:
    return parse_pda(read_text(ref), source=ref)


def load_graph(ref: str) -> nx.Graph:
    name = _builtin(ref)
    if name is None:
        return parse_graph(read_text(ref), source=ref)
    if name in GRAPHS:
        return GRAPHS[name]()
    raise _unknown("graph", name, GRAPHS)


def load_td(ref: str) -> TreeDecomposition:
    return parse_td(read_text(ref), source=ref)


def load_oracle(ref: str, generators: Optional[Sequence[Word]] = None) -> GroupOracle:
    """
    A group given by a built-in name, `free:a,b`, or a file chosen by suffix:
    `.pg` pregroup, `.group` table, anything else a graph of groups.
    """
    if ref.startswith(FREE_PREFIX):
        letters = [x for x in ref[len(FREE_PREFIX):].split(",") if x]
        if not letters:
            raise InputError("a free group needs at least one letter", {"ref": ref})
        return FreeGroupOracle(letters)
    name = _builtin(ref)
    if name is not None:
        return GogOracle(builtin_gog(name), generators)
    single = None if generators is None else [".".join(g) for g in generators]
    if ref.endswith((".pg", ".group")) and generators and any(len(g) != 1 for g in generators):
        raise InputError("pregroup and table generators are single letters", {"generators": single})
    if ref.endswith(".pg"):
        return PregroupOracle(parse_pregroup(read_text(ref), source=ref), single)
    if ref.endswith(".group"):
        return FiniteGroupOracle(parse_group(read_text(ref), source=ref), single)
    return GogOracle(parse_gog(read_text(ref), source=ref), generators)


def is_graph_ref(ref: str) -> bool:
    """Plain graphs: `.graph` files and the built-in graphs."""
    return ref.endswith(".graph") or _builtin(ref) in GRAPHS


def load_host(ref: str, generators: Optional[Sequence[Word]] = None, radius: Optional[int] = None) -> Tuple[nx.Graph, Optional[GroupOracle]]:
    """The graph cuts are computed in: a plain graph, or the Cayley ball of a group."""
    if is_graph_ref(ref):
        return load_graph(ref), None
    oracle = load_oracle(ref, generators)
    return cayley_ball(oracle, radius), oracle
