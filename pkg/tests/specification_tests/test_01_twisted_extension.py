from collections import Counter
from GroupShifts.decomposition import decompose, factor_multiset, verify_series
from GroupShifts.finite_group import simple_group_tag
from GroupShifts.morphisms import image, kernel
from GroupShifts.group_shift import equals, full_shift, point_count
from GroupShifts.sigma_topology import is_sigma_connected
from tests.utilities.testing_constants import C2, twisted_h_code, twisted_shift, twisted_square_track


def test_twisted_shape():
    """
    sigma(h) = g^2 h over C4 x C2: ld 4 and sigma-connected.
    """
    shift = twisted_shift()

    assert shift.limit_degree == 4
    assert is_sigma_connected(shift)


def test_twisted_is_an_extension_of_full_shifts():
    """
    1 -> C2^N -> G -> C2^N -> 1 through the h coordinate.
    """
    shift = twisted_shift()
    code = twisted_h_code(shift)

    assert equals(kernel(code), twisted_square_track(shift))
    assert equals(image(code), full_shift(C2))
    assert twisted_square_track(shift).limit_degree == 2


def test_twisted_decomposition():
    shift = twisted_shift()
    series = decompose(shift)

    assert verify_series(shift, series).passed
    assert len(series.chain) == 3
    assert series.head[0].order == 1
    assert factor_multiset(series) == Counter({2: 2})
    assert sorted(simple_group_tag(f) for f in series.factors) == ["C2", "C2"]
    assert equals(series.chain[1], twisted_square_track(shift))
    assert point_count(series.tail) == 1
    assert series.nilpotency == 0
