import pytest
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup

from errors import AxiomViolation, InputError, ParseError
from finite_groups import (
    Permutation,
    check_group,
    conjugator,
    cyclic,
    direct_product,
    element_order,
    format_group,
    free_action,
    is_homomorphism,
    left_cosets,
    parse_group,
    permutation_closure,
    relabel,
    subgroup_closure,
    symmetric,
)

# Loop of order 5: identity, inverses and latin rows, but not associative.
LOOP_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def test_cyclic_names_and_orders():
    z6 = cyclic(6, "b")
    assert z6.names == ("1", "b", "b2", "b3", "b4", "b5")
    assert [element_order(z6, g) for g in z6.elements()] == [1, 6, 3, 2, 3, 6]
    assert z6.inv(z6.element("b2")) == z6.element("b4")


def test_symmetric_group():
    s3 = symmetric(3)
    assert s3.order == 6
    assert sorted(element_order(s3, g) for g in s3.elements()) == [1, 2, 2, 2, 3, 3]
    with pytest.raises(InputError):
        symmetric(6)


def test_direct_product():
    g = direct_product(cyclic(2, "a"), cyclic(3, "b"))
    assert g.order == 6
    assert g.names[:4] == ("1", "b", "b2", "a")
    assert max(element_order(g, x) for x in g.elements()) == 6


def test_non_associative_loop_is_rejected():
    with pytest.raises(AxiomViolation) as info:
        check_group(LOOP_5)
    assert info.value.axiom == "associativity"
    assert len(info.value.witnesses["triple"]) == 3


@pytest.mark.parametrize(
    "table, axiom",
    [
        ([[0, 1], [1, 1]], "inverse"),
        ([[0, 1, 2], [1, 0, 0], [2, 0, 0]], "latin"),
        ([[0, 1], [1, 2]], "closure"),
        ([[1, 0], [0, 1]], "identity"),
    ],
)
def test_axiom_violations_are_named(table, axiom):
    with pytest.raises(AxiomViolation) as info:
        check_group(table)
    assert info.value.axiom == axiom


def test_subgroups_and_cosets():
    z6 = cyclic(6)
    h = subgroup_closure(z6, [z6.element("a2")])
    assert h == frozenset({0, 2, 4})
    assert left_cosets(z6, sorted(h)) == [[0, 2, 4], [1, 3, 5]]


def test_homomorphism_check():
    z6, z3 = cyclic(6), cyclic(3)
    assert is_homomorphism(z6, z3, [g % 3 for g in range(6)])
    assert not is_homomorphism(z6, z3, [0, 1, 1, 0, 1, 1])


def test_relabel_keeps_identity_name():
    z2 = relabel(cyclic(2), ["1", "t"])
    assert z2.element("t") == 1
    with pytest.raises(InputError):
        relabel(cyclic(2), ["e", "t"])


def test_permutation_products_compose_left_to_right():
    p = Permutation((1, 0, 2))
    q = Permutation((0, 2, 1))
    assert (p * q)(0) == q(p(0)) == 2
    assert (p * p).is_identity()
    assert str(Permutation((1, 2, 0))) == "(0 1 2)"


@pytest.mark.parametrize(
    "generators, degree",
    [
        ([(1, 0, 2, 3), (1, 2, 3, 0)], 4),
        ([(1, 2, 0, 4, 5, 3)], 6),
        ([(1, 0, 3, 2), (2, 3, 0, 1)], 4),
        ([(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)], 5),
    ],
)
def test_permutation_closure_matches_sympy(generators, degree):
    ours = permutation_closure([Permutation(g) for g in generators], degree)
    oracle = PermutationGroup([SympyPermutation(list(g)) for g in generators])
    assert len(ours) == oracle.order()


def test_free_action_and_conjugator():
    z3 = cyclic(3)
    alpha = free_action(z3, 6)
    alpha.check_homomorphism()
    assert alpha.is_free()
    shuffle = Permutation((3, 5, 1, 0, 4, 2))
    beta = alpha.conjugate(shuffle)
    phi = conjugator(alpha, beta)
    for g in z3.elements():
        assert alpha(g) == phi.inverse() * beta(g) * phi


def test_free_action_needs_divisible_degree():
    with pytest.raises(InputError):
        free_action(cyclic(4), 6)


def test_group_file_format():
    text = "order 3\nnames: 1 b b2\n0 1 2\n1 2 0\n2 0 1\n"
    group = parse_group(text)
    assert group.element("b2") == 2
    assert format_group(group) == text


def test_group_file_errors_point_at_lines():
    with pytest.raises(ParseError) as info:
        parse_group("order 2\n0 1\n1\n", source="z2.group")
    assert info.value.line == 3
