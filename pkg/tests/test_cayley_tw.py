import itertools

import networkx as nx
import pytest

from errors import ConstructionError, ParseError, UsageError
from finite_groups import cyclic
from fixtures import comb, data_path, psl2z, zxz2
from formal_lang import free_group_wp_grammar
from cayley_tw import (
    FiniteGroupOracle,
    FreeGroupOracle,
    GogOracle,
    PregroupOracle,
    TreeDecomposition,
    adjacent_bags_intersect,
    cayley_ball,
    clique_tree,
    complete_graph,
    extend_generators_for_chordality,
    format_graph,
    format_td,
    grammar_constant,
    grid_graph,
    interior,
    is_chordal,
    maximal_cliques_covered,
    muller_schupp_td,
    neighborhood_td,
    neighbourhood_bound,
    normalize_td,
    parse_graph,
    parse_td,
    path_decomposition,
    single_bag,
    sphere,
    treewidth_exact,
    treewidth_upper_bound,
    validate_td,
)
from pregroups import free_product_pregroup, pregroup_from_gog, wp_grammar


def brute_force_treewidth(graph):
    """Minimum over all elimination orderings of the largest later neighbourhood."""
    best = graph.number_of_nodes() - 1
    for order in itertools.permutations(graph.nodes):
        g = graph.copy()
        width = 0
        for v in order:
            neighbours = list(g.neighbors(v))
            width = max(width, len(neighbours))
            g.add_edges_from(itertools.combinations(neighbours, 2))
            g.remove_node(v)
        best = min(best, width)
    return best


@pytest.mark.parametrize(
    "oracle, radius, size",
    [
        (lambda: GogOracle(psl2z()), 2, 8),
        (lambda: FreeGroupOracle(["a", "b"]), 2, 17),
        (lambda: FiniteGroupOracle(cyclic(6)), 1, 6),
        (lambda: FiniteGroupOracle(cyclic(6), ["a"]), 3, 6),
    ],
)
def test_ball_sizes(oracle, radius, size):
    ball = cayley_ball(oracle(), radius)
    assert ball.number_of_nodes() == size
    assert ball.graph["origin"] == "1"
    assert all(d <= radius for _, d in ball.nodes(data="distance"))


def test_ball_sphere_and_interior():
    ball = cayley_ball(FreeGroupOracle(["a", "b"]), 3)
    assert len(sphere(ball)) == 4 * 3 * 3
    inner = interior(ball)
    assert inner.number_of_nodes() == 17
    assert inner.graph["radius"] == 2
    assert nx.is_tree(ball)


def test_pregroup_oracle_matches_gog_oracle():
    gog = zxz2()
    by_gog = cayley_ball(GogOracle(gog), 3)
    by_pregroup = cayley_ball(PregroupOracle(pregroup_from_gog(gog).pregroup, ["a", "y"]), 3)
    assert by_gog.number_of_nodes() == by_pregroup.number_of_nodes()
    assert nx.is_isomorphic(by_gog, by_pregroup)


def test_td_validation_names_the_failed_axiom():
    path = nx.path_graph(["a", "b", "c"])
    tree = nx.path_graph(3)
    missing_vertex = TreeDecomposition(tree, {0: frozenset("ab"), 1: frozenset("b"), 2: frozenset("b")})
    assert validate_td(path, missing_vertex).axiom == "T1"
    missing_edge = TreeDecomposition(tree, {0: frozenset("ab"), 1: frozenset("b"), 2: frozenset("c")})
    assert validate_td(path, missing_edge).axiom == "T2"
    broken_subtree = TreeDecomposition(tree, {0: frozenset("ab"), 1: frozenset("bc"), 2: frozenset("a")})
    report = validate_td(path, broken_subtree)
    assert report.axiom == "T3"
    assert "T3" in report.describe()
    good = path_decomposition(path, ["a", "b", "c"])
    assert validate_td(path, good).ok
    assert validate_td(path, single_bag(path)).bag_size == 3


def test_normalization_contracts_comparable_bags():
    path = nx.path_graph(["a", "b", "c"])
    tree = nx.path_graph(4)
    td = TreeDecomposition(tree, {0: frozenset("a"), 1: frozenset("ab"), 2: frozenset("bc"), 3: frozenset("c")})
    normal = normalize_td(path, td)
    assert normal.tree.number_of_nodes() == 2
    assert normal.bag_size == 2
    assert adjacent_bags_intersect(normal)


def test_neighbourhood_bags_stay_decompositions():
    grid = grid_graph(3)
    td = TreeDecomposition(nx.path_graph(1), {0: frozenset(["1,1"])})
    grown = neighborhood_td(grid, td, 1)
    assert grown.bags[0] == frozenset(["1,1", "0,1", "2,1", "1,0", "1,2"])
    assert len(grown.bags[0]) <= neighbourhood_bound(1, 4, 1)
    path = nx.path_graph(["a", "b", "c", "d"])
    td = path_decomposition(path, ["a", "b", "c", "d"])
    assert validate_td(path, neighborhood_td(path, td, 2)).ok


def test_psl2z_ball_is_chordal_with_triangle_bags():
    ball = interior(cayley_ball(GogOracle(psl2z()), 5))
    assert is_chordal(ball)
    assert is_chordal(ball) == nx.is_chordal(ball)
    td = clique_tree(ball)
    assert td.bag_size == 3
    assert validate_td(ball, td).ok
    assert maximal_cliques_covered(ball, td) == (True, None)


def test_clique_tree_needs_a_chordal_graph():
    square = nx.cycle_graph(4)
    assert not is_chordal(square)
    with pytest.raises(ConstructionError):
        clique_tree(square)


def test_td_text_format_keeps_labels_with_spaces():
    ball = cayley_ball(GogOracle(psl2z()), 3)
    td = clique_tree(ball)
    text = format_td(td)
    assert "a b" in text
    loaded = parse_td(text, source="psl2z.td")
    assert sorted(loaded.bags.values(), key=sorted) == sorted(td.bags.values(), key=sorted)
    assert nx.is_isomorphic(loaded.tree, td.tree)
    assert validate_td(ball, loaded).ok
    assert format_td(loaded) == text


def test_td_text_format_errors():
    with pytest.raises(ParseError) as info:
        parse_td("bag 0: a, b | 1\n", source="bad.td")
    assert info.value.line == 1
    with pytest.raises(ParseError) as info:
        parse_td("bag 0: a\nnode 1: b\n", source="bad.td")
    assert info.value.line == 2


def test_extended_generators_make_zxz2_chordal():
    gog = zxz2()
    assert not is_chordal(interior(cayley_ball(GogOracle(gog), 3)))
    extended = extend_generators_for_chordality(gog, radius=3)
    assert len(extended) > len(GogOracle(gog).generators)
    ball = interior(cayley_ball(GogOracle(gog, extended), 3))
    assert is_chordal(ball)


@pytest.mark.parametrize("side", [2, 3, 4])
def test_grid_treewidth(side):
    assert treewidth_exact(grid_graph(side)) == side


def test_treewidth_of_small_graphs_matches_brute_force():
    graphs = [
        complete_graph(5),
        nx.cycle_graph(6),
        nx.path_graph(5),
        nx.petersen_graph().subgraph(range(7)).copy(),
        nx.gnm_random_graph(7, 11, seed=3),
    ]
    for graph in graphs:
        exact = treewidth_exact(graph)
        assert exact == brute_force_treewidth(graph)
        assert exact <= treewidth_upper_bound(graph)


def test_treewidth_refuses_large_graphs():
    with pytest.raises(UsageError):
        treewidth_exact(grid_graph(5))


def test_muller_schupp_decomposition_of_free_group():
    ball = cayley_ball(FreeGroupOracle(["a", "b"]), 4)
    k = grammar_constant(free_group_wp_grammar(["a", "b"]))
    result = muller_schupp_td(ball, k)
    assert result.interior_report.ok
    assert result.levels == 3
    assert result.within_bound
    assert result.max_diameter <= 2


def test_muller_schupp_decomposition_of_psl2z():
    ball = cayley_ball(GogOracle(psl2z()), 4)
    k = grammar_constant(wp_grammar(free_product_pregroup([cyclic(2, "a"), cyclic(3, "b")])))
    result = muller_schupp_td(ball, k)
    assert result.interior_report.ok
    assert result.max_diameter <= 3 * k
    assert result.k == k


def test_graph_text_format():
    loaded = parse_graph(data_path("comb.graph").read_text(), source="comb.graph")
    expected = comb(2, 3)
    assert {frozenset(e) for e in loaded.edges} == {frozenset(e) for e in expected.edges}
    again = parse_graph(format_graph(loaded))
    assert set(again.nodes) == set(loaded.nodes)
