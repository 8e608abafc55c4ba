import math
import pytest
from GroupShifts.exceptions import AlphabetMismatchError, InvalidGroupError, PreconditionError, SizeBudgetExceeded
from GroupShifts.group_shift import FinitePoint, GroupShift, blocks, brute_force_blocks, contains, decode_1step, \
    enumerate_finite, equals, forward_trim, from_generators, full_shift, group_graph, intersection, \
    ker_sigma_power, kernel_chain, periodic_count, point_count, recode_1step, sigma_image, sigma_preimage, trim, \
    trivial_shift
from GroupShifts.morphisms import compose, identity_code, image
from tests.utilities.testing_constants import C2, C3, diagonal_shift, rotation_subgroup_shift, \
    rotation_tail_shift, twisted_shift, twisted_square_track


@pytest.fixture()
def twisted():
    yield twisted_shift()


def test_full_shift():
    shift = full_shift(C2)

    assert shift.width == 0
    assert shift.limit_degree == 2
    assert shift.entropy == pytest.approx(math.log(2))
    assert shift.edges == [(0,), (1,)]
    assert blocks(shift, 2).order == 8


def test_canonical_width():
    shift = GroupShift(C2, 2, [(a, b, c) for a in range(2) for b in range(2) for c in range(2)])

    assert shift.width == 0
    assert equals(shift, full_shift(C2))


def test_invalid_presentations():
    with pytest.raises(InvalidGroupError):
        GroupShift(C2, 1, [(0, 2)])
    with pytest.raises(InvalidGroupError):
        GroupShift(C2, 1, [(0, 1, 1)])
    with pytest.raises(PreconditionError):
        GroupShift(C2, -1, [])


def test_twisted_blocks(twisted):
    assert twisted.limit_degree == 4
    assert twisted.minimal_step == 1
    assert blocks(twisted, 0).order == 8
    assert blocks(twisted, 1).order == 32
    assert kernel_chain(twisted, bound=4).sizes == [8, 4, 4, 4, 4]


def test_blocks_match_oracle(twisted):
    for i in range(4):
        assert blocks(twisted, i).words == sorted(brute_force_blocks(twisted, i))


def test_block_budget():
    shift = full_shift(C2, budget=10)

    with pytest.raises(SizeBudgetExceeded):
        blocks(shift, 4)


def test_periodic_count(twisted):
    assert periodic_count(twisted, 1) == 4
    assert periodic_count(full_shift(C3), 3) == 27
    assert periodic_count(diagonal_shift(), 5) == 2

    with pytest.raises(PreconditionError):
        periodic_count(twisted, 0)


def test_ker_sigma_power(twisted):
    first = ker_sigma_power(twisted, 1)

    assert first.is_finite
    assert point_count(first) == 4
    assert equals(ker_sigma_power(twisted, 0), trivial_shift(twisted.alphabet))
    assert equals(sigma_preimage(trivial_shift(twisted.alphabet), twisted, 1), first)


def test_intersection(twisted):
    common = intersection(ker_sigma_power(twisted, 1), twisted_square_track(twisted))

    assert point_count(common) == 2


def test_containment(twisted):
    track = twisted_square_track(twisted)

    assert contains(twisted, track)
    assert not contains(track, twisted)
    assert contains(twisted, ker_sigma_power(twisted, 2))


def test_sigma_image():
    shift = rotation_tail_shift()

    assert shift.limit_degree == 3
    assert equals(sigma_image(shift, 1), rotation_subgroup_shift(shift))
    assert equals(sigma_image(shift, 0), shift)


def test_recode_1step(twisted):
    recoded, code = recode_1step(twisted)

    assert recoded.alphabet.order == 32
    assert recoded.width <= 1
    assert recoded.limit_degree == 4
    assert code.anticipation == 1


def test_recode_round_trip(twisted):
    recoded, code = recode_1step(twisted)
    decode = decode_1step(twisted, recoded)

    assert decode.anticipation == 0
    assert compose(decode, code).table == identity_code(twisted).table
    assert compose(code, decode).table == identity_code(recoded).table
    assert equals(image(compose(decode, code)), twisted)
    for i in range(1, 5):
        for w in twisted.block_words(i):
            assert decode.apply(code.apply(w)) == w[:len(w) - code.anticipation]


def test_trim():
    full = full_shift(C2)
    loop_and_entry = GroupShift(C2, 1, [(0, 0), (1, 0)])

    assert equals(trim(full), full)
    assert trim(loop_and_entry).edges == [(0, 0), (1, 0)]
    assert equals(trim(GroupShift(C2, 1, [(0, 0)])), trivial_shift(C2))
    assert forward_trim({(0, 0), (0, 1)}, 1) == {(0, 0)}
    assert forward_trim({(0, 0), (1, 0)}, 1) == {(0, 0), (1, 0)}


def test_enumerate_finite():
    assert enumerate_finite(diagonal_shift()) == [FinitePoint((), (0,)), FinitePoint((), (1,))]
    assert enumerate_finite(trivial_shift(C3)) == [FinitePoint((), (0,))]


def test_enumerate_finite_needs_finite_shift(twisted):
    with pytest.raises(PreconditionError):
        enumerate_finite(twisted)
    with pytest.raises(PreconditionError):
        point_count(twisted)


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        equals(full_shift(C2), full_shift(C3))
    assert full_shift(C2) != full_shift(C3)


def test_from_generators():
    assert equals(from_generators(C2, 1, [(1, 1)]), diagonal_shift())
    assert twisted_shift() == twisted_shift()


def test_group_graph():
    graph = group_graph(full_shift(C2))

    assert graph.number_of_nodes() == 2
    assert graph.number_of_edges() == 4
