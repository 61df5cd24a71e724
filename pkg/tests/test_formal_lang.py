import pytest

from errors import InputError, ParseError, VFTableError
from finite_groups import cyclic
from fixtures import AUTOMATA, anbn, balanced, ends_with_ab, free_group_wp, matrix_example
from formal_lang import (
    Cfg,
    CykRecognizer,
    Nfa,
    Pda,
    Transition,
    Verdict,
    accepts,
    build_vf_system,
    cfg_to_pda,
    check_vf_tables,
    eliminate_epsilon,
    finite_group_wp_dfa,
    format_automaton,
    fresh_bottom,
    hotz_presentation,
    is_cnf,
    is_deterministic,
    language_slice,
    matrix_accepts,
    nfa_to_dfa,
    nfa_to_matrices,
    nfa_to_rational,
    normal_closure_grammar,
    nullable_variables,
    parse_automaton,
    parse_grammar,
    pda_run,
    pda_to_cfg,
    pumping_constant,
    rational_subgroup_generators,
    rational_to_nfa,
    reduce_grammar,
    to_cnf,
    vf_det_pda,
    vf_normal_form,
    words_up_to,
)
from graph_of_groups import VFEntry, VFStructure, infinite_dihedral_vf
from rewrite import free_reduce, normalize, parse_word


def test_matrix_example_generators():
    monoid = nfa_to_matrices(matrix_example())
    assert monoid.generators["a"].astype(int).tolist() == [[0, 1, 0], [1, 0, 1], [1, 0, 0]]
    assert monoid.generators["b"].astype(int).tolist() == [[1, 0, 0], [1, 0, 0], [1, 0, 0]]
    assert monoid.matrix(("a", "a"))[0, 2]
    assert not monoid.matrix(("b",))[0, 2]


@pytest.mark.parametrize("name", sorted(AUTOMATA))
def test_recognisers_agree_on_short_words(name):
    nfa = AUTOMATA[name]()
    dfa = nfa_to_dfa(nfa)
    monoid = nfa_to_matrices(nfa)
    glushkov = rational_to_nfa(nfa_to_rational(nfa), nfa.alphabet)
    assert dfa.is_deterministic()
    for word in words_up_to(nfa.alphabet, 8):
        expected = accepts(nfa, word)
        assert accepts(dfa, word) == expected, word
        assert matrix_accepts(monoid, nfa.initial, nfa.final, word) == expected, word
        assert accepts(glushkov, word) == expected, word


def test_subset_construction_names_reachable_subsets():
    dfa = nfa_to_dfa(ends_with_ab())
    assert set(dfa.states) == {"{s}", "{s,p}", "{s,f}"}
    assert dfa.final == frozenset({"{s,f}"})


def test_undeclared_state_is_rejected():
    with pytest.raises(InputError):
        Nfa.build(["1"], ["a"], [("1", "a", "2")], ["1"], ["1"])


def test_finite_group_word_problem_dfa():
    dfa = finite_group_wp_dfa(cyclic(3, "b"), ["b", "b2"])
    assert accepts(dfa, ("b", "b", "b"))
    assert accepts(dfa, ("b", "b2"))
    assert not accepts(dfa, ("b", "b"))
    with pytest.raises(InputError):
        finite_group_wp_dfa(cyclic(4), ["a2"])


def test_rational_subgroup_generators():
    # (a a)* over {a, a~} in the free group of rank one generates 2Z.
    nfa = Nfa.build(["0", "1"], ["a", "a~"], [("0", "a", "1"), ("1", "a", "0")], ["0"], ["0"])
    generators = rational_subgroup_generators(
        nfa,
        evaluate=free_reduce,
        member=lambda element: len(element) % 2 == 0,
    )
    assert ("a", "a") in generators
    assert all(free_reduce(w) and len(free_reduce(w)) % 2 == 0 for w in generators)


def test_epsilon_elimination_and_cnf():
    g = anbn()
    assert nullable_variables(g) == {"S"}
    h = eliminate_epsilon(g)
    assert [rhs for lhs, rhs in h.productions if rhs == ()] == [()]
    cnf = to_cnf(g)
    assert is_cnf(cnf)
    assert pumping_constant(cnf) == 2 ** len(cnf.variables)


@pytest.mark.parametrize(
    "grammar, member",
    [
        (anbn, lambda w: len(w) % 2 == 0 and w == ("a",) * (len(w) // 2) + ("b",) * (len(w) // 2)),
        (free_group_wp, lambda w: free_reduce(w) == ()),
    ],
)
def test_cyk_matches_direct_membership(grammar, member):
    g = grammar()
    recognise = CykRecognizer(to_cnf(g))
    for word in words_up_to(g.terminals, 6):
        assert recognise(word) == member(word), word


@pytest.mark.parametrize("grammar", [anbn, balanced, free_group_wp])
def test_shift_reduce_pda_accepts_the_language(grammar):
    g = grammar()
    recognise = CykRecognizer(to_cnf(g))
    m = cfg_to_pda(g)
    for word in words_up_to(g.terminals, 4):
        assert pda_run(m, word).accepted == recognise(word), word


@pytest.mark.parametrize("grammar", [anbn, balanced])
def test_triple_construction_round_trip(grammar):
    g = grammar()
    back = to_cnf(reduce_grammar(pda_to_cfg(cfg_to_pda(g))))
    expected = CykRecognizer(to_cnf(g))
    actual = CykRecognizer(back)
    for word in words_up_to(g.terminals, 6):
        assert actual(word) == expected(word), word


def test_shift_reduce_pda_is_not_deterministic():
    assert not is_deterministic(cfg_to_pda(anbn()))


def test_shift_reduce_pda_rejects_outright():
    result = pda_run(cfg_to_pda(anbn()), parse_word("a b b"))
    assert result.verdict == Verdict.REJECT
    assert not result.pruned


def deep_push_pda():
    """Five empty-input pushes, then one read that pops them all."""
    states = tuple(f"q{i}" for i in range(6)) + ("qf",)
    pushes = [Transition((), f"q{i}", (), ("A",), f"q{i + 1}") for i in range(5)]
    finish = Transition(("A",) * 5, "q5", ("a",), (), "qf")
    return Pda(states, ("a",), ("A",), tuple(pushes) + (finish,), "q0", frozenset(["qf"]))


def test_stacks_above_the_horizon_are_still_explored():
    m = deep_push_pda()
    result = pda_run(m, ("a",))
    assert result.accepted
    assert result.pruned
    assert pda_run(m, ("a", "a")).verdict == Verdict.REJECT


def test_unbounded_pushing_runs_out_of_fuel_instead_of_rejecting():
    loop = Pda(("q",), ("a",), ("A",), (Transition((), "q", (), ("A",), "q"),), "q", frozenset(["q"]))
    assert pda_run(loop, ("a",), fuel=500).verdict == Verdict.FUEL_EXHAUSTED


def hash_counter_pda():
    """a^n b^n, counting with the stack symbol '#'."""
    transitions = (
        Transition((), "p", ("a",), ("#",), "p"),
        Transition((), "p", (), (), "q"),
        Transition(("#",), "q", ("b",), (), "q"),
    )
    return Pda(("p", "q"), ("a", "b"), ("#",), transitions, "p", frozenset(["q"]))


def test_triple_construction_picks_an_unused_bottom_marker():
    assert fresh_bottom(("#", "A")) == "##"
    m = hash_counter_pda()
    recognise = CykRecognizer(to_cnf(reduce_grammar(pda_to_cfg(m))))
    for word in words_up_to(("a", "b"), 6):
        n = len(word) // 2
        expected = len(word) % 2 == 0 and word == ("a",) * n + ("b",) * n
        assert recognise(word) == expected, word
        assert pda_run(m, word).accepted == expected, word


def test_hotz_presentation_of_anbn():
    presentation = hotz_presentation(anbn())
    assert presentation.witnesses["S"] == ()
    assert ("b~", "a~") in presentation.relators
    assert "witness S: _" in presentation.lines()


def test_hotz_needs_the_empty_word():
    with pytest.raises(InputError):
        hotz_presentation(Cfg.build([("S", ("a",))], "S"))


def test_normal_closure_grammar_words_are_trivial_mod_relator():
    g = normal_closure_grammar(["a", "a~"], [("a", "a")])
    recognise = CykRecognizer(to_cnf(g))
    assert recognise(parse_word("a a"))
    assert recognise(parse_word("a~ a a a"))
    assert not recognise(parse_word("a"))
    with pytest.raises(InputError):
        normal_closure_grammar(["a"], [])


def test_vf_tables_of_infinite_dihedral_group():
    vf = infinite_dihedral_vf()
    check_vf_tables(vf)
    assert vf_normal_form(vf, parse_word("a t a t")) == ((), "1")
    assert vf_normal_form(vf, parse_word("t a")) == (("t",), "a")
    assert build_vf_system(vf).rules


def test_inconsistent_vf_tables_name_a_triple():
    vf = infinite_dihedral_vf()
    table = {a: dict(row) for a, row in vf.table.items()}
    table["a"]["t"] = VFEntry(word=["t"], rep="a")
    broken = VFStructure(generators=vf.generators, representatives=vf.representatives, table=table)
    with pytest.raises(VFTableError) as info:
        check_vf_tables(broken)
    assert len(info.value.witnesses["triple"]) == 3


def test_vf_pda_is_deterministic_and_decides_the_word_problem():
    vf = infinite_dihedral_vf()
    m = vf_det_pda(vf)
    assert is_deterministic(m)
    for word in words_up_to(vf.delta, 5):
        assert pda_run(m, word).accepted == (vf_normal_form(vf, word) == ((), "1")), word


def dihedral_element(word):
    """Evaluate a word in Z x| Z/2 with t = (1, 0) and a = (0, 1)."""
    shift, flip = 0, 0
    steps = {"t": (1, 0), "t~": (-1, 0), "a": (0, 1)}
    for x in word:
        n, s = steps[x]
        shift += -n if flip else n
        flip ^= s
    return shift, flip


@pytest.mark.slow
def test_vf_pda_matches_the_semidirect_product():
    vf = infinite_dihedral_vf()
    m = vf_det_pda(vf)
    system = build_vf_system(vf)
    for word in words_up_to(vf.delta, 8):
        trivial = dihedral_element(word) == (0, 0)
        run = pda_run(m, word)
        assert run.accepted == trivial, word
        assert run.max_branching <= 1
        assert (normalize(system, word) == ()) == trivial, word


def test_automaton_text_format():
    nfa = ends_with_ab()
    assert language_slice(parse_automaton(format_automaton(nfa)), 6) == language_slice(nfa, 6)
    with pytest.raises(ParseError) as info:
        parse_automaton("states: 1\nnonsense\n", source="bad.nfa")
    assert info.value.line == 2


def test_grammar_text_format():
    g = parse_grammar("axiom: S\nS -> a S b | _\n")
    recognise = CykRecognizer(to_cnf(g))
    assert recognise(parse_word("a a b b"))
    assert not recognise(parse_word("a b b"))
    with pytest.raises(ParseError):
        parse_grammar("axiom: S\nS a b\n")
