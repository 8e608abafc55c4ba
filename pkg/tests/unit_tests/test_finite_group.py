import pytest
from GroupShifts.exceptions import ContainmentError, InvalidGroupError, NotNormalError, PreconditionError, \
    SizeBudgetExceeded
from GroupShifts.finite_group import FiniteGroup, GroupHom, Subgroup, abelian_invariants, all_subgroups, \
    alternating_group, are_isomorphic, closure, composition_factors, composition_series, conjugacy_classes, \
    cyclic_group, direct_power, direct_product, element_order, extend_homomorphism, from_permutations, is_abelian, \
    is_normal, is_simple, isomorphic_actions, minimal_normal_subgroups, normal_closure, normal_subgroups, \
    quotient_group, simple_group_tag, symmetric_group, whole
from tests.utilities import small_alphabets
from tests.utilities.testing_constants import C2, C3, C4

KLEIN_TABLE = [[0, 1, 2, 3],
               [1, 0, 3, 2],
               [2, 3, 0, 1],
               [3, 2, 1, 0]]


@pytest.fixture()
def s3():
    yield symmetric_group(3)


def transposition(group: FiniteGroup) -> int:
    return group.labels.index("(0 1)")


def test_cyclic_group():
    group = cyclic_group(6)

    assert group.order == 6
    assert group.mul(4, 5) == 3
    assert group.inv(2) == 4
    assert group.power(2, 3) == 0
    assert element_order(group, 4) == 3
    group.verify()


def test_table_without_inverses_is_rejected():
    with pytest.raises(InvalidGroupError):
        FiniteGroup([[0, 1], [1, 1]])


def test_non_associative_table_fails_verification():
    # Latin square with identity 0 that is not associative
    table = [[0, 1, 2, 3, 4],
             [1, 0, 3, 4, 2],
             [2, 4, 0, 1, 3],
             [3, 2, 4, 0, 1],
             [4, 3, 1, 2, 0]]
    with pytest.raises(InvalidGroupError):
        FiniteGroup(table).verify()


def test_permutation_groups(s3):
    a5 = alternating_group(5)

    assert s3.order == 6
    assert s3.label(0) == "()"
    assert not is_abelian(s3)
    assert a5.order == 60
    assert is_simple(a5)
    assert simple_group_tag(a5) == "A5"


def test_is_simple():
    assert is_simple(cyclic_group(5))
    assert not is_simple(cyclic_group(4))
    assert simple_group_tag(C3) == "C3"

    with pytest.raises(PreconditionError):
        is_simple(cyclic_group(1))


def test_conjugacy_classes(s3):
    assert sorted(len(c) for c in conjugacy_classes(s3)) == [1, 2, 3]


def test_normal_closure():
    s4 = symmetric_group(4)
    flip = closure(s4, [transposition(s4)])
    double = closure(s4, [s4.labels.index("(0 1)(2 3)")])

    assert not is_normal(flip, whole(s4))
    assert normal_closure(s4, flip.elements).order == 24
    assert normal_closure(s4, double.elements).order == 4
    assert is_normal(normal_closure(s4, double.elements), whole(s4))
    assert normal_closure(s4, [0]).order == 1


def test_normal_subgroups(s3):
    assert [n.order for n in normal_subgroups(s3)] == [1, 3, 6]
    assert [n.order for n in minimal_normal_subgroups(s3)] == [3]
    assert len(all_subgroups(s3)) == 6


def test_composition_series(s3):
    assert [n.order for n in composition_series(s3)] == [6, 3, 1]
    assert [f.order for f in composition_factors(s3)] == [2, 3]
    assert [f.order for f in composition_factors(C4)] == [2, 2]


def test_abelian_invariants():
    assert abelian_invariants(direct_product(C2, C4)) == [2, 4]
    assert abelian_invariants(direct_product(C2, C2, C2)) == [2, 2, 2]
    assert abelian_invariants(cyclic_group(12)) == [3, 4]


def test_abelian_invariants_need_abelian_group(s3):
    with pytest.raises(PreconditionError):
        abelian_invariants(s3)


def test_isomorphism(s3):
    assert are_isomorphic(direct_product(C2, C3), cyclic_group(6))
    assert not are_isomorphic(C4, direct_product(C2, C2))
    assert are_isomorphic(s3, from_permutations([[1, 0, 2], [0, 2, 1]]))
    assert not are_isomorphic(s3, cyclic_group(6))


def test_closure_and_quotient():
    group = cyclic_group(12)
    sub = closure(group, [8])
    quotient, projection = quotient_group(group, sub)

    assert sub.elements == (0, 4, 8)
    assert quotient.order == 4
    assert projection.kernel() == sub
    assert projection.is_homomorphism()


def test_quotient_by_non_normal_subgroup(s3):
    with pytest.raises(NotNormalError):
        quotient_group(s3, closure(s3, [transposition(s3)]))


def test_normality_needs_containment(s3):
    flip = closure(s3, [transposition(s3)])
    rotations = minimal_normal_subgroups(s3)[0]

    assert is_normal(rotations, whole(s3))
    assert not is_normal(flip, whole(s3))
    with pytest.raises(ContainmentError):
        is_normal(flip, rotations)


def test_direct_power_coding():
    power = direct_power(C3, 3)

    assert power.order == 27
    assert power.encode((1, 2, 0)) == 15
    assert power.decode(15) == (1, 2, 0)
    assert power.mul(power.encode((1, 2, 0)), power.encode((2, 2, 1))) == power.encode((0, 1, 1))


def test_direct_power_budget():
    with pytest.raises(SizeBudgetExceeded) as excep:
        direct_power(C3, 20, budget=1000)
    assert excep.value.budget == 1000


def test_group_equality_falls_back_to_tables():
    klein = FiniteGroup(KLEIN_TABLE, labels=["e", "a", "b", "c"])

    assert cyclic_group(4) == cyclic_group(4)
    assert klein == direct_product(C2, C2)
    assert klein != C4


def test_induced_group():
    sub = Subgroup(cyclic_group(12), elements=[0, 3, 6, 9])
    group = sub.as_group()

    assert group.order == 4
    assert group.lift(group.mul(1, 2)) == 9
    assert are_isomorphic(group, C4)


def test_group_hom():
    group = cyclic_group(6)
    doubling = GroupHom.from_function(group, group, lambda x: (2 * x) % 6)

    assert doubling.is_homomorphism()
    assert doubling.kernel().elements == (0, 3)
    assert doubling.image().order == 3
    assert not doubling.is_bijective()
    assert not GroupHom(C2, C2, [1, 0]).is_homomorphism()


def test_extend_homomorphism():
    onto = extend_homomorphism(C4, C2, [1], [1])

    assert onto.image_table == [0, 1, 0, 1]
    assert extend_homomorphism(C2, C4, [1], [1]) is None
    assert extend_homomorphism(C4, C2, [], []) is None


def test_isomorphic_actions():
    klein = direct_product(C2, C2)
    swap = GroupHom.from_function(klein, klein, lambda x: klein.encode(tuple(reversed(klein.decode(x)))))
    quarter = Subgroup(cyclic_group(12), elements=[0, 3, 6, 9]).as_group()

    assert isomorphic_actions(GroupHom(C4, C4, [0, 3, 2, 1]), GroupHom(quarter, quarter, [0, 3, 2, 1]))
    assert not isomorphic_actions(GroupHom(C3, C3, [0, 1, 2]), GroupHom(C3, C3, [0, 2, 1]))
    assert not isomorphic_actions(swap, GroupHom(klein, klein, [0, 1, 2, 3]))
    assert not isomorphic_actions(GroupHom(C4, C4, [0, 1, 2, 3]), GroupHom(klein, klein, [0, 1, 2, 3]))


def test_small_alphabets_are_the_groups_up_to_order_eight():
    alphabets = small_alphabets()
    quaternion = alphabets[-1]

    assert sorted(g.order for g in alphabets) == [2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]
    assert not any(are_isomorphic(a, b) for i, a in enumerate(alphabets) for b in alphabets[i + 1:])
    assert not is_abelian(quaternion)
    assert sum(1 for x in range(8) if element_order(quaternion, x) == 2) == 1
