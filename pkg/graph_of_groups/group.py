"""
Finite graphs of finite groups.

Letters of the word alphabet are the non-identity element names of the
vertex groups (globally unique) and the directed edge letters. Every
declared edge y from P to Q mints the pair y and y~ with s(y~) = Q and
t(y~) = P; both act on the same edge group G_y.
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from errors import ConstructionError, InputError
from finite_groups import FiniteGroup, is_homomorphism, left_cosets
from rewrite import (
    Alphabet,
    FuelExhausted,
    SemiThueSystem,
    Word,
    format_word,
    inverse_letter,
    normalize,
)

logger = logging.getLogger(__name__)

IDENTITY = "1"
VERTEX = "vertex"
EDGE = "edge"


@dataclass(frozen=True)
class EdgeSpec:
    """An undirected edge as declared: G_y embedded into both endpoint groups."""
    name: str
    source: str
    target: str
    group: FiniteGroup
    source_map: Tuple[int, ...]
    target_map: Tuple[int, ...]


@dataclass(frozen=True)
class Edge:
    """A directed edge letter y with a -> a^y into G_{s(y)}."""
    name: str
    source: str
    target: str
    group: FiniteGroup
    embedding: Tuple[int, ...]
    reverse: str


@dataclass(frozen=True)
class GogLetter:
    """A letter tagged with what it names: (vertex, element) or an edge."""
    letter: str
    kind: str
    vertex: Optional[str] = None
    element: Optional[int] = None


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[str, ...]
    relators: Tuple[Word, ...]

    def lines(self) -> List[str]:
        out = [f"generators: {' '.join(self.generators) or '_'}"]
        out += [f"relator: {format_word(r)}" for r in self.relators]
        return out


class GraphOfGroups:
    """
    A connected graph Y with a finite group at every vertex and edge.

    Construction validates everything once; derived artifacts (spanning
    tree, coset representatives, S_G, Britton rules) are computed lazily
    and cached. Instances are never mutated afterwards.

    Raises:
        InputError: on duplicate or clashing names, unknown endpoints,
            maps that are not injective homomorphisms, or a disconnected graph.
    """

    def __init__(
        self,
        vertices: Mapping[str, FiniteGroup],
        edges: Sequence[EdgeSpec],
        base: Optional[str] = None,
    ):
        if not vertices:
            raise InputError("a graph of groups needs at least one vertex")
        self.vertex_groups: Dict[str, FiniteGroup] = dict(vertices)
        self.vertices: Tuple[str, ...] = tuple(vertices)
        self.base = self.vertices[0] if base is None else base
        if self.base not in self.vertex_groups:
            raise InputError(f"base vertex {self.base!r} is not declared", {"base": self.base})
        self.declared_edges: Tuple[EdgeSpec, ...] = tuple(edges)

        self._letters: Dict[str, GogLetter] = {}
        for vertex, group in self.vertex_groups.items():
            if group.names[0] != IDENTITY:
                raise InputError(f"identity of G_{vertex} must be named '1'", {"vertex": vertex})
            for g in group.elements():
                if g == group.identity:
                    continue
                self._claim(GogLetter(group.name(g), VERTEX, vertex, g))

        self.edges: Dict[str, Edge] = {}
        for declared in self.declared_edges:
            self._check_edge(declared)
            reverse = inverse_letter(declared.name)
            forward = Edge(declared.name, declared.source, declared.target, declared.group, tuple(declared.source_map), reverse)
            backward = Edge(reverse, declared.target, declared.source, declared.group, tuple(declared.target_map), declared.name)
            for edge in (forward, backward):
                self._claim(GogLetter(edge.name, EDGE))
                self.edges[edge.name] = edge

        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((e.source, e.target) for e in self.declared_edges)
        if not nx.is_connected(graph):
            raise InputError(
                "the underlying graph is not connected",
                {"components": [sorted(c) for c in nx.connected_components(graph)]},
            )
        logger.debug(
            f"graph of groups: {len(self.vertices)} vertices, {len(self.declared_edges)} edges, base {self.base}"
        )

    def _claim(self, info: GogLetter) -> None:
        if info.letter == IDENTITY or info.letter in self._letters:
            raise InputError(
                f"letter {info.letter!r} is used twice; element and edge names must be globally unique",
                {"letter": info.letter},
            )
        self._letters[info.letter] = info

    def _check_edge(self, declared: EdgeSpec) -> None:
        for end in (declared.source, declared.target):
            if end not in self.vertex_groups:
                raise InputError(f"edge {declared.name} names unknown vertex {end!r}", {"edge": declared.name})
        if declared.name.endswith("~"):
            raise InputError(f"declared edge names may not end in '~': {declared.name!r}", {"edge": declared.name})
        for end, image in ((declared.source, declared.source_map), (declared.target, declared.target_map)):
            target = self.vertex_groups[end]
            image = tuple(image)
            if len(image) != declared.group.order or any(not 0 <= x < target.order for x in image):
                raise InputError(
                    f"map of edge {declared.name} into G_{end} must list {declared.group.order} element indices",
                    {"edge": declared.name, "map": list(image)},
                )
            if len(set(image)) != len(image):
                raise InputError(f"map of edge {declared.name} into G_{end} is not injective", {"edge": declared.name})
            if not is_homomorphism(declared.group, target, image):
                raise InputError(f"map of edge {declared.name} into G_{end} is not a homomorphism", {"edge": declared.name})

    # letters

    @cached_property
    def vertex_letters(self) -> Tuple[str, ...]:
        return tuple(x for x, info in self._letters.items() if info.kind == VERTEX)

    @cached_property
    def edge_letters(self) -> Tuple[str, ...]:
        return tuple(self.edges)

    @cached_property
    def alphabet(self) -> Alphabet:
        """Sigma with its involution: g -> g^-1 on vertex letters, y <-> y~ on edges."""
        involution = {}
        for x in self.vertex_letters:
            info = self._letters[x]
            group = self.vertex_groups[info.vertex]
            involution[x] = group.name(group.inv(info.element))
        for y, edge in self.edges.items():
            involution[y] = edge.reverse
        return Alphabet(self.vertex_letters + self.edge_letters, involution)

    def letter(self, x: str) -> GogLetter:
        try:
            return self._letters[x]
        except KeyError:
            raise InputError(f"letter {x!r} is not in the alphabet of the graph of groups", {"letter": x}) from None

    def is_edge_letter(self, x: str) -> bool:
        return x in self.edges

    def check_word(self, word: Sequence[str]) -> Word:
        return self.alphabet.check_word(word)

    def element_letter(self, vertex: str, g: int) -> Word:
        """The one-letter word of g in G_vertex, or the empty word for the identity."""
        return () if g == 0 else (self.vertex_groups[vertex].name(g),)

    # spanning tree and tree paths

    @cached_property
    def _tree_parent(self) -> Dict[str, Optional[str]]:
        parent: Dict[str, Optional[str]] = {self.base: None}
        queue = deque([self.base])
        while queue:
            current = queue.popleft()
            for y in self.edge_letters:
                edge = self.edges[y]
                if edge.source == current and edge.target not in parent:
                    parent[edge.target] = y
                    queue.append(edge.target)
        return parent

    @cached_property
    def spanning_tree(self) -> frozenset:
        """
        BFS tree from the base vertex as a set of directed edge letters.

        Edges are scanned in alphabet order at every vertex; the set is
        closed under y -> y~.
        """
        tree = set()
        for y in self._tree_parent.values():
            if y is not None:
                tree.update((y, self.edges[y].reverse))
        return frozenset(tree)

    def tree_path_from_base(self, vertex: str) -> Word:
        """T[P0, vertex]."""
        path: List[str] = []
        while self._tree_parent[vertex] is not None:
            y = self._tree_parent[vertex]
            path.append(y)
            vertex = self.edges[y].source
        return tuple(reversed(path))

    def tree_path(self, start: str, end: str) -> Word:
        """T[start, end], the geodesic in the spanning tree."""
        down = self.tree_path_from_base(start)
        up = self.tree_path_from_base(end)
        return _cancel_edges(self.alphabet.inverse_word(down) + up, self.edges)

    # coset representatives

    @cached_property
    def _coset_tables(self) -> Dict[str, Tuple[Tuple[int, ...], Dict[int, Tuple[int, int]]]]:
        tables = {}
        for y, edge in self.edges.items():
            group = self.vertex_groups[edge.source]
            preimage = {image: a for a, image in enumerate(edge.embedding)}
            reps: List[int] = []
            factor: Dict[int, Tuple[int, int]] = {}
            for coset in left_cosets(group, edge.embedding):
                c = coset[0]
                reps.append(c)
                c_inv = group.inv(c)
                for g in coset:
                    factor[g] = (c, preimage[group.mul(c_inv, g)])
            tables[y] = (tuple(reps), factor)
        return tables

    def coset_reps(self, y: str) -> Tuple[int, ...]:
        """C_y: least element of each left coset of G_y^y in G_{s(y)}, identity first."""
        return self._coset_tables[self._edge(y).name][0]

    def factor(self, y: str, g: int) -> Tuple[int, int]:
        """g = c a^y with c in C_y; returns (c, a)."""
        return self._coset_tables[self._edge(y).name][1][g]

    def _edge(self, y: str) -> Edge:
        try:
            return self.edges[y]
        except KeyError:
            raise InputError(f"unknown edge letter {y!r}", {"edge": y}) from None

    # rewriting systems

    def _merge_rules(self) -> List[Tuple[Word, Word]]:
        rules = []
        for vertex in self.vertices:
            group = self.vertex_groups[vertex]
            for g in group.elements():
                for h in group.elements():
                    if g and h:
                        rules.append(((group.name(g), group.name(h)), self.element_letter(vertex, group.mul(g, h))))
        return rules

    @cached_property
    def sg_system(self) -> SemiThueSystem:
        """
        The convergent system S_G:
          g h -> [gh] in every vertex group (deleted when gh = 1),
          [c a^y] y -> c y a^y~ for c in C_y and a != 1,
          y~ y -> empty for every directed edge.
        """
        rules = self._merge_rules()
        for y, edge in self.edges.items():
            source = self.vertex_groups[edge.source]
            back = self.edges[edge.reverse]
            for c in self.coset_reps(y):
                for a in edge.group.elements():
                    if a == 0:
                        continue
                    lhs = (source.name(source.mul(c, edge.embedding[a])), y)
                    rhs = self.element_letter(edge.source, c) + (y,) + self.element_letter(edge.target, back.embedding[a])
                    rules.append((lhs, rhs))
        rules += [((edge.reverse, y), ()) for y, edge in self.edges.items()]
        system = SemiThueSystem(self.alphabet, rules)
        logger.debug(f"S_G built with {len(system)} rules")
        return system

    @cached_property
    def britton_system(self) -> SemiThueSystem:
        """Length-reducing Britton rules: vertex merges, y~ a^y y -> a^y~ and y~ y -> empty."""
        rules = self._merge_rules()
        for y, edge in self.edges.items():
            source = self.vertex_groups[edge.source]
            back = self.edges[edge.reverse]
            for a in edge.group.elements():
                if a == 0:
                    continue
                rules.append(
                    ((edge.reverse, source.name(edge.embedding[a]), y), self.element_letter(edge.target, back.embedding[a]))
                )
            rules.append(((edge.reverse, y), ()))
        return SemiThueSystem(self.alphabet, rules)

    # words

    def is_path_typed(self, word: Sequence[str], start: Optional[str] = None, end: Optional[str] = None) -> bool:
        """Whether the word is a path from `start` to `end` (both default to the base)."""
        current = self.base if start is None else start
        end = self.base if end is None else end
        for x in self.check_word(word):
            info = self._letters[x]
            if info.kind == VERTEX:
                if info.vertex != current:
                    return False
            else:
                edge = self.edges[x]
                if edge.source != current:
                    return False
                current = edge.target
        return current == end

    def edge_sequence(self, word: Sequence[str]) -> Word:
        """The y-sequence: the edge letters of the word in order."""
        return tuple(x for x in word if x in self.edges)

    def psi_embed(self, word: Sequence[str]) -> Word:
        """
        Map a word over the generators of pi1(G, T) into pi(G, P0, P0).

        g in G_Q goes to T[P0, Q] g T[Q, P0] and y to T[P0, s(y)] y T[t(y), P0];
        adjacent inverse edge letters are cancelled.
        """
        out: List[str] = []
        for x in self.check_word(word):
            info = self._letters[x]
            if info.kind == VERTEX:
                start = end = info.vertex
            else:
                start, end = self.edges[x].source, self.edges[x].target
            out += self.tree_path(self.base, start) + (x,) + self.tree_path(end, self.base)
        return _cancel_edges(out, self.edges)

    def britton_reduce(self, word: Sequence[str]) -> Word:
        """Normalize with the Britton rules; never longer than the input."""
        result = normalize(self.britton_system, self.check_word(word))
        if isinstance(result, FuelExhausted):
            raise ConstructionError("Britton reduction is length-reducing but ran out of fuel", {"word": list(word)})
        return result

    def word_problem(self, word: Sequence[str]) -> bool:
        """
        Whether the word is trivial in pi1(G, T).

        Britton-reduces the psi-embedding; trivial iff no edge letter is
        left and the remaining vertex letters multiply to 1.
        """
        reduced = self.britton_reduce(self.psi_embed(word))
        if self.edge_sequence(reduced):
            return False
        if not reduced:
            return True
        vertex = self._letters[reduced[0]].vertex
        group = self.vertex_groups[vertex]
        if any(self._letters[x].vertex != vertex for x in reduced):
            return False
        return group.product([self._letters[x].element for x in reduced]) == group.identity

    def normal_form(self, word: Sequence[str], fuel: Optional[int] = None) -> Word:
        """S_G normal form of the psi-embedding; equal words have equal normal forms."""
        result = normalize(self.sg_system, self.psi_embed(word), fuel)
        if isinstance(result, FuelExhausted):
            raise ConstructionError(
                f"S_G normalization ran out of fuel after {result.steps} steps",
                {"word": list(word), "reached": list(result.word)},
            )
        return result

    def inverse_word(self, word: Sequence[str]) -> Word:
        return self.alphabet.inverse_word(self.check_word(word))

    # presentations

    def pi1_presentation(self) -> Presentation:
        """
        Generators: vertex letters and declared edges (y~ is the formal inverse of y).

        Relators: g h [gh]^-1 per vertex group, y~ a^y y (a^y~)^-1 per
        declared edge and non-identity a (dropped when trivial), and y for
        every declared edge in the spanning tree.
        """
        relators: List[Word] = []
        for vertex in self.vertices:
            group = self.vertex_groups[vertex]
            for g in group.elements():
                for h in group.elements():
                    if g and h:
                        relators.append((group.name(g), group.name(h)) + self.element_letter(vertex, group.inv(group.mul(g, h))))
        for declared in self.declared_edges:
            edge = self.edges[declared.name]
            source = self.vertex_groups[declared.source]
            target = self.vertex_groups[declared.target]
            for a in declared.group.elements():
                if a == 0:
                    continue
                relators.append(
                    (edge.reverse, source.name(declared.source_map[a]), declared.name, target.name(target.inv(declared.target_map[a])))
                )
        relators += [(declared.name,) for declared in self.declared_edges if declared.name in self.spanning_tree]
        generators = self.vertex_letters + tuple(declared.name for declared in self.declared_edges)
        return Presentation(generators, tuple(relators))

    def __repr__(self) -> str:
        return f"GraphOfGroups(vertices={list(self.vertices)}, edges={[e.name for e in self.declared_edges]})"


def _cancel_edges(word: Sequence[str], edges: Mapping[str, Edge]) -> Word:
    """Cancel adjacent y y~ pairs of edge letters; vertex letters are left alone."""
    stack: List[str] = []
    for x in word:
        if stack and x in edges and stack[-1] == edges[x].reverse:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)
