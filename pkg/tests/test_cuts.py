import itertools

import networkx as nx
import pytest

from cayley_tw import FiniteGroupOracle, FreeGroupOracle, GogOracle, cayley_ball
from cuts import (
    CutsPipeline,
    PathWindow,
    PeriodicPath,
    corners,
    cut_from_side,
    cut_to_dot,
    cuts_splitting_path,
    default_periods,
    edge_boundary,
    enumerate_kcuts,
    has_infinite_order,
    is_nested,
    minimal_cuts,
    optimal_cuts,
    path_family,
    periodic_window,
    structure_tree,
    structure_tree_to_dot,
    tilde_classes,
)
from errors import ConstructionError, InputError
from finite_groups import cyclic
from fixtures import comb, comb_windows, cycle, cycle_with_spokes, half_turn, psl2z

STAGES = ["enumerate_cuts", "select_optimal", "build_structure_tree", "compute_blocks"]


def brute_force_cut_keys(graph, k):
    """Every connected side through the least vertex with connected complement and small boundary."""
    anchor = min(graph.nodes, key=str)
    others = [v for v in graph.nodes if v != anchor]
    keys = set()
    for size in range(len(others)):
        for chosen in itertools.combinations(others, size):
            side = {anchor, *chosen}
            rest = set(graph.nodes) - side
            if not (nx.is_connected(graph.subgraph(side)) and nx.is_connected(graph.subgraph(rest))):
                continue
            if len(edge_boundary(graph, side)) <= k:
                keys.add(cut_from_side(graph, side).key)
    return keys


@pytest.mark.parametrize(
    "graph, k",
    [
        (comb(1, 2), 3),
        (nx.petersen_graph(), 3),
        (cycle_with_spokes(4), 2),
        (cycle(6), 2),
    ],
)
def test_enumeration_matches_brute_force(graph, k):
    found = enumerate_kcuts(graph, k=k)
    assert {c.key for c in found} == brute_force_cut_keys(graph, k)
    assert all(c.weight <= k for c in found)


def test_cycle_bonds_are_pairs_of_edges():
    found = enumerate_kcuts(cycle(6), k=2)
    assert len(found) == 15
    assert {c.weight for c in found} == {2}
    anchor = min(cycle(6).nodes, key=str)
    assert all(anchor in c.side for c in found)


def test_half_turns_cross():
    graph = cycle_with_spokes(8)
    c = cut_from_side(graph, half_turn(8, 0))
    d = cut_from_side(graph, half_turn(8, 2))
    assert c.weight == d.weight == 2
    assert all(corners(c, d))
    assert not is_nested(c, d)
    assert is_nested(c, c.complement())
    with pytest.raises(ConstructionError):
        structure_tree([c, c.complement(), d, d.complement()])


def test_cut_sides_must_be_connected():
    graph = cycle(6)
    with pytest.raises(InputError):
        cut_from_side(graph, {"c0", "c2"})
    with pytest.raises(InputError):
        cut_from_side(graph, graph.nodes)


def test_comb_windows_and_minimal_cuts():
    graph = comb()
    alpha, beta = comb_windows()
    candidates = enumerate_kcuts(graph, k=2)
    by_alpha = minimal_cuts(cuts_splitting_path(graph, alpha, 2, candidates))
    by_beta = minimal_cuts(cuts_splitting_path(graph, beta, 2, candidates))
    assert {c.weight for c in by_alpha} == {1}
    assert len(by_alpha) == 3
    assert {c.weight for c in by_beta} == {2}
    # eight column cuts and the two ladder ends of the row
    assert len(by_beta) == 10
    assert any(alpha.split_by(c) for c in by_beta)


def test_window_needs_room_for_its_margin():
    with pytest.raises(InputError):
        PathWindow(("a", "b", "c"), margin=2)
    with pytest.raises(InputError):
        PathWindow(("a", "b", "a", "c"))


def test_optimal_cuts_of_comb():
    result = optimal_cuts(comb(), comb_windows(), max_k=2)
    assert result.k == 2
    assert sorted(result.minimal_weights.values()) == [1, 2]
    assert result.weights == [1, 2]
    assert len(result.optimal) == 26
    keys = {c.key for c in result.optimal}
    assert all(c.complement().key in keys for c in result.optimal)
    assert set(result.m_values.values()) == {0}


def test_structure_tree_of_comb():
    optimal = optimal_cuts(comb(), comb_windows(), max_k=2).optimal
    tree = structure_tree(optimal)
    assert nx.is_tree(tree.graph)
    assert tree.graph.number_of_edges() == len(optimal) // 2
    assert tree.graph.number_of_nodes() == 14
    assert len(tilde_classes(optimal)) == 14
    assert max(len(members) for members in tree.classes) == 3
    dot = structure_tree_to_dot(tree)
    assert dot.startswith("graph StructureTree {")


def test_pipeline_on_comb():
    windows = comb_windows()
    state = CutsPipeline().run(comb(), windows, max_k=2)
    assert state["stages_completed"] == STAGES
    # a lone ladder end needs two steps to join its neighbours
    assert state["lambda_"] == 2
    assert len(state["blocks"]) == 14
    assert all(b.connected for b in state["blocks"])


def test_free_group_blocks_are_stars():
    oracle = FreeGroupOracle(["a", "b"])
    ball = cayley_ball(oracle, 4)
    state = CutsPipeline().run(ball, path_family(oracle, ball), max_k=2)
    assert state["stages_completed"] == STAGES
    assert state["lambda_"] == 1
    assert state["optimal"].weights == [1]
    interior = [b for b in state["blocks"] if not b.touches_sphere]
    assert interior
    assert {b.size for b in interior} == {5}
    assert all(b.connected for b in state["blocks"])


def test_psl2z_blocks_are_two_triangles_wide():
    oracle = GogOracle(psl2z())
    ball = cayley_ball(oracle, 4)
    state = CutsPipeline().run(ball, path_family(oracle, ball), max_k=2)
    assert state["optimal"].weights == [1]
    interior = [b for b in state["blocks"] if not b.touches_sphere]
    assert interior
    assert {b.size for b in interior} == {6}


def test_default_periods_of_psl2z():
    periods = default_periods(GogOracle(psl2z()))
    assert set(periods) == {("a", "b"), ("a", "b2"), ("b", "a"), ("b2", "a")}


def test_infinite_order():
    assert has_infinite_order(FreeGroupOracle(["a", "b"]), ("a",))
    assert not has_infinite_order(FiniteGroupOracle(cyclic(3, "b")), ("b",))
    assert not has_infinite_order(GogOracle(psl2z()), ("a",))


def test_periodic_window_runs_sphere_to_sphere():
    oracle = FreeGroupOracle(["a", "b"])
    ball = cayley_ball(oracle, 3)
    window = periodic_window(oracle, ball, PeriodicPath((), ("a",)))
    assert len(window.vertices) == 7
    assert all(ball.nodes[v]["distance"] == 3 for v in (window.vertices[0], window.vertices[-1]))
    with pytest.raises(InputError):
        periodic_window(FiniteGroupOracle(cyclic(3)), cayley_ball(FiniteGroupOracle(cyclic(3)), 1),
                        PeriodicPath((), ("a",)))


def test_cut_dot_marks_side_and_boundary():
    graph = cycle(4)
    c = cut_from_side(graph, {"c0", "c1"})
    dot = cut_to_dot(graph, c)
    assert dot.startswith("graph Cut {")
    assert dot.count("style=dashed") == 2
    assert dot.count("fillcolor") == 2
