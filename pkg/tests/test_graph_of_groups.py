import networkx as nx
import pytest
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup

from conftest import random_word
from errors import InputError, ParseError
from finite_groups import cyclic
from fixtures import BUILTIN_GOGS, builtin_gog, data_path, dihedral, free2, psl2z, zxz2
from graph_of_groups import (
    EdgeSpec,
    GraphOfGroups,
    amalgam,
    bst_ball,
    format_gog,
    free_subgroup_data,
    parse_gog,
    parse_vf,
    sym_homomorphism,
)
from rewrite import Verdict, check_local_confluence, parse_word


@pytest.mark.parametrize("name", sorted(BUILTIN_GOGS))
def test_sg_system_is_locally_confluent(name):
    verdict = check_local_confluence(builtin_gog(name).sg_system)
    assert verdict.status == Verdict.LOCALLY_CONFLUENT


# sum (|G_P| - 1)^2 + sum |C_y| (|G_y| - 1) + number of directed edges
@pytest.mark.parametrize("gog, count", [(psl2z, 7), (zxz2, 5), (dihedral, 4), (free2, 4)])
def test_sg_rule_count(gog, count):
    assert len(gog().sg_system) == count


@pytest.mark.parametrize(
    "gog, word, trivial",
    [
        (psl2z, "a b a b", False),
        (psl2z, "a a", True),
        (psl2z, "b b2", True),
        (psl2z, "a b a b a b", False),
        (zxz2, "y a y~ a", True),
        (zxz2, "y a y~", False),
        (zxz2, "y y", False),
        (dihedral, "a b b a", True),
        (dihedral, "a b a b", False),
        (free2, "y1 y2 y2~ y1~", True),
        (free2, "y1 y2 y1~ y2~", False),
    ],
)
def test_word_problem(gog, word, trivial):
    assert gog().word_problem(parse_word(word)) is trivial


@pytest.mark.parametrize("name", sorted(BUILTIN_GOGS))
def test_britton_and_normal_forms_agree(name, rng):
    gog = builtin_gog(name)
    letters = list(gog.alphabet.letters)
    for _ in range(150):
        word = random_word(rng, letters, 8)
        assert gog.word_problem(word) == (gog.normal_form(word) == ()), word
        assert gog.normal_form(word + gog.inverse_word(word)) == ()


def test_normal_form_is_irreducible():
    gog = psl2z()
    nf = gog.normal_form(parse_word("a b b a b2 b"))
    assert gog.normal_form(nf) == nf


def test_britton_reduction_removes_pinches():
    gog = zxz2()
    word = parse_word("y~ a y a y~ y")
    assert gog.britton_reduce(word) == ()
    assert gog.britton_reduce(parse_word("y a y~")) == ("a",)


def test_psi_embed_of_vertex_letters():
    gog = psl2z()
    assert gog.psi_embed(("a",)) == ("a",)
    assert gog.psi_embed(("b",)) == ("y", "b", "y~")
    assert gog.is_path_typed(gog.psi_embed(parse_word("a b a")))


def test_pi1_presentation():
    presentation = psl2z().pi1_presentation()
    assert presentation.generators == ("a", "b", "b2", "y")
    assert ("a", "a") in presentation.relators
    assert ("y",) in presentation.relators
    assert "relator: y" in presentation.lines()


def test_spanning_tree_is_closed_under_reversal():
    assert psl2z().spanning_tree == frozenset({"y", "y~"})
    assert zxz2().spanning_tree == frozenset()


def test_bass_serre_ball_of_psl2z():
    tree = bst_ball(psl2z(), 2)
    assert nx.is_tree(tree)
    assert tree.number_of_nodes() == 7
    assert tree.degree[()] == 2
    for node, data in tree.nodes(data=True):
        if data["vertex"] == "Q" and data["depth"] == 1:
            assert tree.degree[node] == 3


def test_bass_serre_ball_of_free_group_is_regular():
    tree = bst_ball(free2(), 2)
    assert nx.is_tree(tree)
    assert tree.degree[()] == 4
    assert tree.number_of_nodes() == 1 + 4 + 4 * 3


@pytest.mark.parametrize("name", ["psl2z", "dihedral", "zxz2"])
def test_free_subgroup_index_matches_sympy(name):
    gog = builtin_gog(name)
    h = sym_homomorphism(gog)
    generators = gog.pi1_presentation().generators
    oracle = PermutationGroup([SympyPermutation(list(h.images[x].images)) for x in generators])
    data = free_subgroup_data(gog)
    assert data.index == oracle.order()
    assert data.index % h.degree == 0


def test_free_subgroup_rank_of_psl2z():
    data = free_subgroup_data(psl2z())
    assert data.degree == 6
    assert data.rank == 1 + data.index // 6


def test_homomorphism_is_injective_on_vertex_groups():
    gog = psl2z()
    h = sym_homomorphism(gog)
    assert not h.image(("a",)).is_identity()
    assert not h.image(("b",)).is_identity()
    assert h.image(("b", "b", "b")).is_identity()


def test_clashing_letters_are_rejected():
    with pytest.raises(InputError):
        amalgam(cyclic(2, "a"), cyclic(2, "a"))


def test_non_homomorphic_edge_map_is_rejected():
    declared = EdgeSpec("y", "P", "P", cyclic(2), (0, 1), (0, 1))
    with pytest.raises(InputError):
        GraphOfGroups({"P": cyclic(3)}, [declared])


def test_disconnected_graph_is_rejected():
    with pytest.raises(InputError) as info:
        GraphOfGroups({"P": cyclic(2, "a"), "Q": cyclic(2, "b")}, [])
    assert len(info.value.witnesses["components"]) == 2


def test_gog_file_matches_builtin():
    loaded = parse_gog(data_path("psl2z.gog").read_text(), source="psl2z.gog")
    assert loaded.alphabet.letters == psl2z().alphabet.letters
    assert loaded.word_problem(parse_word("a b a b")) is False
    assert parse_gog(format_gog(loaded)).pi1_presentation() == loaded.pi1_presentation()


def test_gog_file_errors_point_at_column():
    with pytest.raises(ParseError) as info:
        parse_gog("vertex P cyclic:x\n", source="bad.gog")
    assert (info.value.line, info.value.column) == (1, 10)


def test_vf_file_errors_are_parse_errors():
    with pytest.raises(ParseError):
        parse_vf('{"representatives": ["a"], "table": {}}')
