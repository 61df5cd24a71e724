"""DOT export for structure trees and for balls with a highlighted cut."""
from typing import List

import networkx as nx

from cayley_tw import graph_to_dot
from .cut import Cut
from .structure import Block, StructureTree


def cut_to_dot(graph: nx.Graph, cut: Cut) -> str:
    """The host graph with the cut's side filled and its boundary dashed."""
    return graph_to_dot(graph, highlight=cut.side, name="Cut", dashed=cut.boundary)


def structure_tree_to_dot(tree: StructureTree, block_list: List[Block] = ()) -> str:
    """Vertices are classes (with block sizes when given); edges carry cut weights."""
    sizes = {b.class_id: b.size for b in block_list}
    lines = ["graph StructureTree {"]
    for cid in sorted(tree.graph.nodes):
        label = f"[{cid}] {len(tree.classes[cid])} cuts"
        if cid in sizes:
            label += f", block {sizes[cid]}"
        lines.append(f'  "{cid}" [label="{label}"];')
    for s, t, data in sorted(tree.graph.edges(data=True), key=lambda e: (min(e[0], e[1]), max(e[0], e[1]))):
        a, b = sorted((s, t))
        lines.append(f'  "{a}" -- "{b}" [label="{data["weight"]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
