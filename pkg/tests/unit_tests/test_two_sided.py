import pytest
from GroupShifts.decomposition import DecompositionSeries, decompose, verify_series
from GroupShifts.exceptions import UnverifiedSeriesError
from GroupShifts.group_shift import equals, full_shift, ker_sigma_power, periodic_count
from GroupShifts.sigma_topology import head
from GroupShifts.two_sided import TwoSidedGroupShift, bi_trim, star, star_series, two_sided_blocks, \
    two_sided_is_full, two_sided_periodic_count, verify_star_series
from tests.utilities.testing_constants import C2, diagonal_shift, doubling_certificates, doubling_members, \
    doubling_shift, rotation_subgroup_shift, rotation_tail_shift, twisted_shift


def test_bi_trim():
    assert bi_trim({(0, 1), (1, 1)}, 1) == {(1, 1)}
    assert bi_trim({(0,), (1,)}, 0) == {(0,), (1,)}


def test_star_of_sigma_infinitesimal_shift_is_a_point():
    starred = star(ker_sigma_power(twisted_shift(), 1))

    assert isinstance(starred, TwoSidedGroupShift)
    assert len(starred.edges) == 1


def test_star_drops_transient_letters():
    shift = rotation_tail_shift()

    assert equals(star(shift), star(rotation_subgroup_shift(shift)))
    assert star(shift).limit_degree == 3


def test_star_of_full_shift():
    starred = star(full_shift(C2))

    assert two_sided_is_full(starred)
    assert two_sided_blocks(starred, 3).order == 16
    assert two_sided_periodic_count(starred, 4) == 16


def test_two_sided_periodic_points_match():
    shift = twisted_shift()

    for p in range(1, 5):
        assert two_sided_periodic_count(star(shift), p) == periodic_count(shift, p)


def test_star_series_of_twisted():
    shift = twisted_shift()
    series = decompose(shift)
    verify_series(shift, series)
    starred = star_series(series)
    verdict = verify_star_series(starred)

    assert verdict.passed, verdict.failures
    assert [f.order for f in starred.factors] == [f.order for f in series.factors]
    assert len(starred.chain[-1].edges) == 1


def test_star_series_of_doubling():
    shift = doubling_shift()
    members = doubling_members(shift)
    series = DecompositionSeries(shift, head(shift), members, [C2, C2], doubling_certificates(members))
    verify_series(shift, series)
    starred = star_series(series)

    assert verify_star_series(starred).passed
    assert starred.head[0].order == 2
    assert len(starred.chain[-1].edges) == 1


def test_star_series_needs_verified_series():
    with pytest.raises(UnverifiedSeriesError):
        star_series(decompose(diagonal_shift()))
