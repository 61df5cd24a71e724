import networkx as nx
import numpy as np
import pytest

from conftest import random_word
from errors import AxiomViolation, ConstructionError, ParseError
from finite_groups import cyclic
from fixtures import data_path, psl2z, zxz2
from formal_lang import CykRecognizer, to_cnf, words_up_to
from pregroups import (
    StreamingReducer,
    canonical_key,
    check_pregroup,
    format_pregroup,
    free_pregroup,
    free_product_pregroup,
    geodesic_reduce,
    group_pregroup,
    inverse_witness_length,
    lemma_shape_in_carrier,
    length_reducing_system,
    parse_pregroup,
    pregroup_from_gog,
    sp_system,
    universal_wp,
    wp_grammar,
)
from rewrite import Verdict, apply_once, check_local_confluence, parse_word

LOOP_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]

# Exponents of a in Z/2 and b in Z/3, for the free-product oracle below.
SYLLABLES = {"a": ("a", 1), "b": ("b", 1), "b2": ("b", 2)}
ORDERS = {"a": 2, "b": 3}


def free_product_length(word):
    stack = []
    for x in word:
        if x == "1":
            continue
        factor, power = SYLLABLES[x]
        if stack and stack[-1][0] == factor:
            merged = (stack[-1][1] + power) % ORDERS[factor]
            stack.pop()
            if merged:
                stack.append((factor, merged))
        else:
            stack.append((factor, power))
    return len(stack)


@pytest.fixture
def z2_star_z3():
    return free_product_pregroup([cyclic(2, "a"), cyclic(3, "b")])


def test_zxz2_file_matches_construction():
    built = pregroup_from_gog(zxz2()).pregroup
    loaded = parse_pregroup(data_path("zxz2.pg").read_text(), source="zxz2.pg")
    assert built.carrier == loaded.carrier == ("1", "a", "y", "y~", "y.a", "y~.a")
    assert built.inverse == loaded.inverse
    assert np.array_equal(built.table, loaded.table)


def test_psl2z_pregroup_carrier():
    gp = pregroup_from_gog(psl2z())
    assert len(gp.pregroup) == 10
    assert "y.b.y~" in gp.pregroup.carrier
    for name, word in gp.words.items():
        assert lemma_shape_in_carrier(psl2z(), word), name


@pytest.mark.parametrize(
    "carrier, inverse, table, axiom",
    [
        (["1", "a"], [0, 0], [[0, 1], [1, 0]], "involution"),
        (["1", "a"], [0, 1], [[0, 1], [0, 0]], "P1"),
        (["1", "a"], [0, 1], [[0, 1], [1, -1]], "P2"),
        (["1", "p", "q", "r", "s"], [0, 1, 2, 3, 4], LOOP_5, "P3"),
    ],
)
def test_axiom_violations(carrier, inverse, table, axiom):
    with pytest.raises(AxiomViolation) as info:
        check_pregroup(carrier, inverse, table)
    assert info.value.axiom == axiom


def test_group_and_free_pregroups():
    z3 = group_pregroup(cyclic(3, "b"))
    assert universal_wp(z3, parse_word("b b b"))
    f2 = free_pregroup(["a", "b"])
    assert f2.carrier == ("1", "a", "a~", "b", "b~")
    assert universal_wp(f2, parse_word("a b b~ a~"))
    assert not universal_wp(f2, parse_word("a b a~ b~"))


def test_length_reducing_part_of_sp_is_locally_confluent(z2_star_z3):
    assert len(sp_system(z2_star_z3)) > len(length_reducing_system(z2_star_z3))
    assert check_local_confluence(length_reducing_system(z2_star_z3)).status == Verdict.LOCALLY_CONFLUENT


def test_geodesics_in_a_free_product(z2_star_z3, rng):
    letters = list(z2_star_z3.carrier)
    for _ in range(200):
        word = random_word(rng, letters, 10)
        assert len(geodesic_reduce(z2_star_z3, word)) == free_product_length(word), word


def shortest_in_class(p, n):
    """Shortest length in each class of words of length <= n joined by any S_P rule, either way."""
    system = sp_system(p)
    graph = nx.Graph()
    for word in words_up_to(p.carrier, n):
        graph.add_node(word)
        graph.add_edges_from((word, step.result) for step in apply_once(system, word))
    shortest = {}
    for component in nx.connected_components(graph):
        best = min(len(w) for w in component)
        shortest.update(dict.fromkeys(component, best))
    return shortest


@pytest.mark.slow
@pytest.mark.parametrize(
    "pregroup",
    [
        free_pregroup(["a", "b"]),
        free_product_pregroup([cyclic(2, "a"), cyclic(3, "b")]),
        pregroup_from_gog(zxz2()).pregroup,
    ],
)
def test_geodesic_reduction_is_shortest_in_its_class(pregroup):
    for word, best in shortest_in_class(pregroup, 6).items():
        assert len(geodesic_reduce(pregroup, word)) == best, word


def test_universal_word_problem_matches_graph_of_groups(rng):
    gog = zxz2()
    gp = pregroup_from_gog(gog)
    letters = list(gp.pregroup.carrier)
    for _ in range(200):
        word = random_word(rng, letters, 8)
        assert universal_wp(gp.pregroup, word) == gog.word_problem(gp.embed(word)), word


@pytest.mark.slow
def test_universal_word_problem_matches_graph_of_groups_exhaustively():
    gog = zxz2()
    gp = pregroup_from_gog(gog)
    for word in words_up_to(gp.pregroup.carrier, 6):
        assert universal_wp(gp.pregroup, word) == gog.word_problem(gp.embed(word)), word


def test_canonical_key_identifies_equal_elements(rng):
    p = pregroup_from_gog(zxz2()).pregroup
    letters = list(p.carrier)
    for _ in range(50):
        u = random_word(rng, letters, 5)
        v = random_word(rng, letters, 5)
        padded = u + p.alphabet.inverse_word(u) + v
        assert canonical_key(p, padded) == canonical_key(p, v)
    assert canonical_key(p, parse_word("a y")) == canonical_key(p, parse_word("y.a"))


def test_wp_grammar_matches_reduction():
    p = pregroup_from_gog(zxz2()).pregroup
    recognise = CykRecognizer(to_cnf(wp_grammar(p)))
    for word in words_up_to(p.carrier, 5):
        assert recognise(word) == universal_wp(p, word), word


@pytest.mark.slow
def test_wp_grammar_matches_reduction_on_a_free_product(z2_star_z3):
    recognise = CykRecognizer(to_cnf(wp_grammar(z2_star_z3)))
    for word in words_up_to(z2_star_z3.carrier, 8):
        assert recognise(word) == universal_wp(z2_star_z3, word), word


STREAMING_FIXTURES = [
    free_pregroup(["a", "b"]),
    free_product_pregroup([cyclic(2, "a"), cyclic(3, "b")]),
    pregroup_from_gog(zxz2()).pregroup,
]


@pytest.mark.parametrize("pregroup", STREAMING_FIXTURES[:2])
def test_streaming_reducer_agrees_with_geodesics(pregroup, rng):
    letters = list(pregroup.carrier)
    for _ in range(200):
        word = random_word(rng, letters, 12)
        reducer = StreamingReducer(pregroup).feed_all(word)
        assert reducer.finish() == geodesic_reduce(pregroup, word), word
        assert reducer.accepts() == universal_wp(pregroup, word)
        assert reducer.max_cascade <= reducer.window_bound


@pytest.mark.slow
@pytest.mark.parametrize("pregroup", STREAMING_FIXTURES)
def test_streaming_reducer_on_many_random_words(pregroup, rng):
    letters = list(pregroup.carrier)
    for _ in range(10_000):
        word = random_word(rng, letters, 12)
        reducer = StreamingReducer(pregroup).feed_all(word)
        assert len(reducer.finish()) == len(geodesic_reduce(pregroup, word)), word
        assert reducer.accepts() == universal_wp(pregroup, word), word
        assert reducer.max_cascade <= reducer.cascade_limit == reducer.window_bound + 1


def test_streaming_reducer_on_a_free_pregroup():
    reducer = StreamingReducer(free_pregroup(["a", "b"])).feed_all(parse_word("a a~ b"))
    assert reducer.finish() == ("b",)
    assert reducer.window_bound == 1
    assert not reducer.accepts()


def test_free_product_cascades_stay_within_the_window(z2_star_z3):
    reducer = StreamingReducer(z2_star_z3).feed_all(parse_word("a b a b b2 a b"))
    assert reducer.finish() == ("a", "b2")
    assert reducer.window_bound == 1
    assert reducer.max_cascade <= reducer.window_bound


def test_streaming_cascade_can_use_the_extra_step():
    reducer = StreamingReducer(pregroup_from_gog(zxz2()).pregroup)
    reducer.feed_all(parse_word("y y"))
    assert reducer.max_cascade == 0
    reducer.feed("y~.a")
    assert reducer.finish() == ("y.a",)
    assert reducer.window_bound == 1
    assert reducer.max_cascade == 2


def test_inverse_witnesses(z2_star_z3):
    assert inverse_witness_length(z2_star_z3, "1") == 0
    assert inverse_witness_length(z2_star_z3, "b") == 1
    assert inverse_witness_length(pregroup_from_gog(zxz2()).pregroup, "y.a") == 1
    with pytest.raises(ConstructionError):
        inverse_witness_length(z2_star_z3, "b", max_length=0)


def test_axiom_failures_surface_as_construction_errors(monkeypatch):
    import pregroups.from_gog as from_gog

    def broken(carrier, inverse, table):
        raise AxiomViolation("P3", "forced", {})

    monkeypatch.setattr(from_gog, "check_pregroup", broken)
    with pytest.raises(ConstructionError):
        pregroup_from_gog(zxz2())


def test_pregroup_text_format(z2_star_z3):
    assert format_pregroup(parse_pregroup(format_pregroup(z2_star_z3))) == format_pregroup(z2_star_z3)
    with pytest.raises(ParseError) as info:
        parse_pregroup("carrier: 1 a\ninverse: 1 z\ntable:\n1 a\na 1\n", source="bad.pg")
    assert info.value.line == 2
