import random

import pytest

from conftest import random_word
from errors import InputError, ParseError
from rewrite import (
    Alphabet,
    FuelExhausted,
    SemiThueSystem,
    Verdict,
    apply_once,
    check_local_confluence,
    check_strong_confluence,
    critical_pairs,
    dyck_system,
    equivalent,
    format_system,
    free_group_system,
    free_reduce,
    inverse_word,
    is_length_reducing,
    joinable_bfs,
    normalize,
    parse_system,
    parse_word,
    reduce_with_trace,
)


def test_free_reduce_and_inverse():
    assert free_reduce(parse_word("a b b~ a~ b")) == ("b",)
    assert free_reduce(parse_word("a~ a a")) == ("a",)
    assert inverse_word(("a", "b~")) == ("b", "a~")
    assert parse_word("_") == ()


def test_normalize_free_group():
    system = free_group_system(["a", "b"])
    assert normalize(system, parse_word("a b b~ a~ b")) == ("b",)
    assert normalize(system, ()) == ()


def test_normalize_rejects_foreign_letters():
    with pytest.raises(InputError) as info:
        normalize(free_group_system(["a"]), ("a", "c"))
    assert info.value.witnesses == {"letter": "c", "position": 1}


def test_dyck_normal_forms():
    system = dyck_system()
    assert normalize(system, parse_word("a a b c b c")) == ()
    assert normalize(system, parse_word("b c a b")) == ("b",)
    assert is_length_reducing(system)


def test_fuel_is_reported_as_a_value():
    system = SemiThueSystem(Alphabet(["a"]), [(("a",), ("a", "a"))])
    result = normalize(system, ("a",), fuel=5)
    assert isinstance(result, FuelExhausted)
    assert result.steps == 5
    assert len(result.word) == 6


def test_trace_counts_steps():
    trace = reduce_with_trace(free_group_system(["a"]), parse_word("a a~ a a~"))
    assert trace.word == ()
    assert trace.steps == 2
    assert not trace.exhausted


def test_apply_once_order():
    system = free_group_system(["a"])
    steps = apply_once(system, parse_word("a a~ a"))
    assert [(s.position, s.result) for s in steps] == [(0, ("a",)), (1, ("a",))]


@pytest.mark.parametrize("system", [free_group_system(["a", "b"]), dyck_system()])
def test_convergent_systems_are_locally_confluent(system):
    verdict = check_local_confluence(system)
    assert verdict.status == Verdict.LOCALLY_CONFLUENT
    assert verdict.ok


def test_counterexample_peak():
    system = SemiThueSystem(Alphabet(["a", "b", "c"]), [(("a", "a"), ("b",)), (("a", "a"), ("c",))])
    verdict = check_local_confluence(system)
    assert verdict.status == Verdict.COUNTEREXAMPLE
    assert verdict.peak == ("a", "a")
    assert {verdict.left, verdict.right} == {("b",), ("c",)}
    assert "CounterexamplePeak(a a)" in verdict.describe()


def test_dyck_is_strongly_confluent():
    assert check_strong_confluence(dyck_system()).status == Verdict.STRONGLY_CONFLUENT


def test_critical_pairs_of_dyck():
    pairs = critical_pairs(dyck_system())
    assert pairs
    assert all(p.kind == "overlap" for p in pairs)
    assert (("a", "b", "c", "a"), ("a",), ("a",)) in {(p.peak, p.left, p.right) for p in pairs}


@pytest.mark.parametrize("system", [free_group_system(["a", "b"]), dyck_system()])
def test_normal_form_is_strategy_independent(system, rng):
    letters = list(system.alphabet.letters)
    for _ in range(20):
        word = random_word(rng, letters, 10)
        expected = normalize(system, word)
        for seed in range(100):
            assert normalize(system, word, rng=random.Random(seed)) == expected


def test_equivalence_and_bfs_joinability():
    system = free_group_system(["a", "b"])
    same = equivalent(system, parse_word("a b b~"), parse_word("b~ b a"))
    assert same and same.exact
    assert same.quality == Verdict.LOCALLY_CONFLUENT
    assert not equivalent(system, ("a",), ("b",))
    assert joinable_bfs(system, parse_word("a a~ b"), parse_word("b a a~"), depth=2)


def test_equivalence_without_confluence_is_flagged():
    # b and c are equal in the monoid, yet both are irreducible
    system = SemiThueSystem(Alphabet(["a", "b", "c"]), [(("a", "a"), ("b",)), (("a", "a"), ("c",))])
    answer = equivalent(system, ("b",), ("c",))
    assert not answer
    assert answer.equal is False
    assert answer.quality == Verdict.UNKNOWN
    assert not answer.exact


def test_equivalence_when_normalization_runs_out_of_fuel():
    system = SemiThueSystem(Alphabet(["a"]), [(("a",), ("a", "a"))])
    answer = equivalent(system, ("a",), ("a",), fuel=10)
    assert answer.equal is None
    assert not answer
    assert answer.quality == Verdict.UNKNOWN


def test_parse_system_points_at_unknown_letter():
    with pytest.raises(ParseError) as info:
        parse_system("letters: a a~\na b -> _\n", source="bad.srs")
    assert (info.value.line, info.value.column) == (2, 3)
    assert info.value.message.startswith("bad.srs:2:3:")


def test_parse_system_requires_header():
    with pytest.raises(ParseError):
        parse_system("a -> _\n")


def test_parse_and_format_system():
    text = "letters: a a~\na a~ -> _\na~ a -> _\n"
    system = parse_system(text)
    assert system.alphabet.inverse("a") == "a~"
    assert format_system(system) == text
    assert normalize(system, parse_word("a a~ a")) == ("a",)
