"""
Adjacency-list text format and DOT export for graphs, and a bag-list
format for tree decompositions.

Adjacency lists, one vertex per line with its neighbours after a colon:

    1: a b
    a: 1
    b: 1
"""
import logging
from typing import Hashable, Iterable, List, Optional, Tuple

import networkx as nx

from errors import ParseError
from .decomposition import TreeDecomposition

logger = logging.getLogger(__name__)


def parse_graph(text: str, source: str = "<input>") -> nx.Graph:
    graph = nx.Graph()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        vertex = head.strip()
        if not sep or not vertex or " " in vertex:
            raise ParseError("expected 'vertex: neighbour ...'", lineno, 1, source)
        graph.add_node(vertex)
        for w in rest.split():
            if w == vertex:
                raise ParseError(f"loop at {vertex}", lineno, line.index(w, len(head)) + 1, source)
            graph.add_edge(vertex, w)
    return graph


def _order(vertices: Iterable[Hashable]) -> List[Hashable]:
    return sorted(vertices, key=str)


def format_graph(graph: nx.Graph) -> str:
    lines = []
    for v in _order(graph.nodes):
        lines.append(f"{v}: " + " ".join(str(w) for w in _order(graph.neighbors(v))))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _quote(value: Hashable) -> str:
    text = str(value).replace('"', '\\"')
    return f'"{text}"'


def graph_to_dot(
    graph: nx.Graph,
    highlight: Optional[Iterable[Hashable]] = None,
    name: str = "G",
    dashed: Optional[Iterable[Tuple[Hashable, Hashable]]] = None,
) -> str:
    """Undirected DOT; highlighted vertices are filled, edges carry their generator label."""
    marked = set(highlight or ())
    broken = {frozenset(e) for e in dashed or ()}
    lines = [f"graph {name} {{"]
    for v in _order(graph.nodes):
        style = " style=filled fillcolor=lightblue" if v in marked else ""
        lines.append(f"  {_quote(v)} [label={_quote(v)}{style}];")
    for u, v in sorted(graph.edges, key=lambda e: tuple(sorted((str(e[0]), str(e[1]))))):
        a, b = sorted((u, v), key=str)
        label = graph.edges[u, v].get("generator") or graph.edges[u, v].get("label")
        attrs = [f"label={_quote(label)}"] if label is not None else []
        if frozenset((u, v)) in broken:
            attrs.append("style=dashed")
        attr = f" [{' '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(a)} -- {_quote(b)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def td_to_dot(td: TreeDecomposition, name: str = "TD") -> str:
    """Tree nodes labelled with their bags."""
    lines = [f"graph {name} {{", "  node [shape=box];"]
    for t in _order(td.tree.nodes):
        bag = "{" + ", ".join(str(v) for v in _order(td.bags[t])) + "}"
        lines.append(f"  {_quote(t)} [label={_quote(bag)}];")
    for s, t in sorted(td.tree.edges, key=lambda e: tuple(sorted((str(e[0]), str(e[1]))))):
        a, b = sorted((s, t), key=str)
        lines.append(f"  {_quote(a)} -- {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_td(td: TreeDecomposition) -> str:
    """
    One line per tree node, renumbered 0.. (integer nodes in numeric order
    first, then the rest by label):

        bag 0: 1, a, b | 1, 2

    Bag vertices and neighbouring nodes are comma-separated, since ball
    vertex labels may contain spaces.
    """
    nodes = sorted(td.tree.nodes, key=lambda t: (not isinstance(t, int), t if isinstance(t, int) else str(t)))
    number = {t: i for i, t in enumerate(nodes)}
    lines = []
    for t in nodes:
        neighbours = ", ".join(str(n) for n in sorted(number[s] for s in td.tree.neighbors(t)))
        bag = ", ".join(str(v) for v in _order(td.bags[t]))
        lines.append(f"bag {number[t]}: {bag} | {neighbours}".rstrip())
    return "\n".join(lines) + "\n"


def _items(text: str) -> List[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _node(name: str) -> Hashable:
    return int(name) if name.isdigit() else name


def parse_td(text: str, source: str = "<input>") -> TreeDecomposition:
    """
    Read the format written by format_td. Tree edges may be listed from
    either end; every neighbour must have its own `bag` line.
    """
    tree = nx.Graph()
    bags = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        keyword, _, name = head.partition(" ")
        if keyword != "bag" or not sep or not name.strip():
            raise ParseError("expected 'bag NODE: vertex, ... | node, ...'", lineno, 1, source)
        node = _node(name.strip())
        if node in bags:
            raise ParseError(f"bag {node} is declared twice", lineno, len(keyword) + 2, source)
        members, _, neighbours = rest.partition("|")
        bags[node] = frozenset(_items(members))
        tree.add_node(node)
        edges += [(lineno, node, _node(n)) for n in _items(neighbours)]
    for lineno, s, t in edges:
        if t not in bags:
            raise ParseError(f"bag {s} lists an undeclared neighbour {t}", lineno, 1, source)
        tree.add_edge(s, t)
    logger.debug(f"parsed tree decomposition from {source}: {len(bags)} bags")
    return TreeDecomposition(tree, bags)
