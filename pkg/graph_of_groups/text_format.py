"""
Graph-of-groups files.

    vertex P cyclic:2 names=1,a
    vertex Q cyclic:3 names=1,b,b2
    edge y P Q trivial source=0 target=0
    base P

A group is `trivial`, `cyclic:n`, `symmetric:n` or an inline table
`table:0,1;1,0` (rows separated by `;`). `names=` renames the elements,
identity first. An edge lists its group and the element indices of the
images of the edge-group elements in the source and target groups. The
file declares undirected edges; the reverse letter y~ is minted on load.

Virtually-free structures are JSON documents validated by VFStructure.
"""
import logging
import math
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import ValidationError

from errors import InputError, ParseError, WorkbenchError
from finite_groups import FiniteGroup, check_group, cyclic, relabel, symmetric, trivial_group
from .group import EdgeSpec, GraphOfGroups
from .vf import VFStructure

logger = logging.getLogger(__name__)


def _token_columns(raw: str) -> List[Tuple[str, int]]:
    out = []
    pos = 0
    for tok in raw.split():
        pos = raw.index(tok, pos)
        out.append((tok, pos + 1))
        pos += len(tok)
    return out


def parse_group_spec(text: str) -> FiniteGroup:
    """Build the group named by `trivial`, `cyclic:n`, `symmetric:n` or `table:...`."""
    kind, _, arg = text.partition(":")
    if kind == "trivial" and not arg:
        return trivial_group()
    if kind in ("cyclic", "symmetric"):
        if not arg.isdigit():
            raise ValueError(f"expected {kind}:n")
        return cyclic(int(arg)) if kind == "cyclic" else symmetric(int(arg))
    if kind == "table":
        rows = [[int(x) for x in row.split(",")] for row in arg.split(";")]
        return check_group(rows)
    raise ValueError(f"unknown group {text!r}")


def format_group_spec(group: FiniteGroup) -> str:
    n = group.order
    if n == 1:
        return "trivial"
    if np.array_equal(group.table, cyclic(n).table):
        return f"cyclic:{n}"
    for k in range(3, 6):
        if n == math.factorial(k) and np.array_equal(group.table, symmetric(k).table):
            return f"symmetric:{k}"
    return "table:" + ";".join(",".join(str(int(x)) for x in row) for row in group.table)


def _indices(text: str) -> Tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def parse_gog(text: str, source: str = "<input>") -> GraphOfGroups:
    vertices: Dict[str, FiniteGroup] = {}
    edges: List[EdgeSpec] = []
    base: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = _token_columns(line)
        if not tokens:
            continue
        keyword, column = tokens[0]
        options = {}
        positional = []
        for tok, col in tokens[1:]:
            if "=" in tok:
                key, _, value = tok.partition("=")
                options[key] = (value, col)
            else:
                positional.append((tok, col))
        try:
            if keyword == "vertex":
                if len(positional) != 2:
                    raise ParseError("expected 'vertex NAME GROUP [names=...]'", lineno, column, source)
                name, group_text = positional[0][0], positional[1]
                if name in vertices:
                    raise ParseError(f"duplicate vertex {name!r}", lineno, positional[0][1], source)
                group = _group(group_text, lineno, source)
                if "names" in options:
                    group = relabel(group, options["names"][0].split(","))
                vertices[name] = group
            elif keyword == "edge":
                if len(positional) != 4 or "source" not in options or "target" not in options:
                    raise ParseError(
                        "expected 'edge NAME FROM TO GROUP source=... target=...'", lineno, column, source
                    )
                (name, _), (start, _), (end, _), group_text = positional
                group = _group(group_text, lineno, source)
                try:
                    maps = _indices(options["source"][0]), _indices(options["target"][0])
                except ValueError:
                    raise ParseError("edge maps are comma-separated element indices", lineno, column, source) from None
                edges.append(EdgeSpec(name, start, end, group, maps[0], maps[1]))
            elif keyword == "base":
                if len(positional) != 1:
                    raise ParseError("expected 'base NAME'", lineno, column, source)
                base = positional[0][0]
            else:
                raise ParseError(f"unknown keyword {keyword!r}", lineno, column, source)
        except ParseError:
            raise
        except WorkbenchError as e:
            raise ParseError(e.message, lineno, column, source) from e
    if not vertices:
        raise ParseError("no vertices declared", 1, 1, source)
    try:
        return GraphOfGroups(vertices, edges, base)
    except WorkbenchError as e:
        logger.error(f"{source}: {e.message}")
        raise


def _group(token: Tuple[str, int], lineno: int, source: str) -> FiniteGroup:
    text, column = token
    try:
        return parse_group_spec(text)
    except ValueError as e:
        raise ParseError(str(e), lineno, column, source) from None


def format_gog(gog: GraphOfGroups) -> str:
    lines = []
    for vertex in gog.vertices:
        group = gog.vertex_groups[vertex]
        lines.append(f"vertex {vertex} {format_group_spec(group)} names={','.join(group.names)}")
    for declared in gog.declared_edges:
        lines.append(
            f"edge {declared.name} {declared.source} {declared.target} {format_group_spec(declared.group)} "
            f"source={','.join(str(x) for x in declared.source_map)} "
            f"target={','.join(str(x) for x in declared.target_map)}"
        )
    lines.append(f"base {gog.base}")
    return "\n".join(lines) + "\n"


def parse_vf(text: str, source: str = "<input>") -> VFStructure:
    """Load a VFStructure from JSON; schema errors point at line 1."""
    try:
        return VFStructure.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(x) for x in first.get("loc", ()))
        raise ParseError(f"{where}: {first.get('msg')}" if where else str(first.get("msg")), 1, 1, source) from None
    except InputError as e:
        raise ParseError(e.message, 1, 1, source) from e


def format_vf(vf: VFStructure) -> str:
    return vf.model_dump_json(indent=2) + "\n"
