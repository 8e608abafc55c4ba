"""
Bounded search: every window subgroup of width at most 2 over C2 and C3, every normal subgroup of A5^2
as a window, and a sample of product windows over A5^3.
"""
from functools import reduce
from itertools import product
import operator
import pytest
from GroupShifts.finite_group import Subgroup, all_subgroups, alternating_group, closure, cyclic_group, direct_power, \
    normal_subgroups
from GroupShifts.group_shift import equals, from_window, full_shift, ker_sigma_power
from GroupShifts.morphisms import is_full_shift, is_normal_in, quotient

WIDTH = 2
WINDOW_LIMIT = 3600


@pytest.mark.parametrize("p", [2, 3])
def test_proper_normal_subshifts_of_prime_full_shifts(p):
    alphabet = cyclic_group(p)
    full = full_shift(alphabet)
    proper = 0

    for window in all_subgroups(direct_power(alphabet, WIDTH + 1)):
        shift = from_window(alphabet, WIDTH, window)
        if equals(shift, full):
            continue
        proper += 1
        assert is_normal_in(shift, full)
        assert shift.is_finite

        letters = is_full_shift(quotient(full, shift).quotient)
        assert letters is not None
        assert letters.order == p

    assert proper > 0


def _power_conjugates_into(power, window: Subgroup) -> bool:
    return all(power.conjugate(t, h) in window for t in power.generators for h in window.generators)


def _kernel_form(shift, kernels) -> int:
    return next((i for i, k in enumerate(kernels) if equals(shift, k)), -1)


def test_normal_windows_of_a5_squared():
    a5 = alternating_group(5)
    full = full_shift(a5)
    kernels = [ker_sigma_power(full, i) for i in range(2)]
    windows = normal_subgroups(direct_power(a5, 2))
    forms = set()

    assert len(windows) == 4
    for window in windows:
        shift = from_window(a5, 1, window)
        assert is_normal_in(shift, full)
        if equals(shift, full):
            continue
        forms.add(_kernel_form(shift, kernels))

    assert forms == {0, 1}


def test_sampled_windows_of_a5_cubed():
    """
    Product windows over the trivial group, A4 and A5 in each coordinate; only those without an A4
    factor are normal, and each of them presents some ker sigma^i.
    """
    a5 = alternating_group(5)
    full = full_shift(a5)
    power = direct_power(a5, WIDTH + 1)
    kernels = [ker_sigma_power(full, i) for i in range(WIDTH + 1)]
    a4 = closure(a5, [a5.labels.index("(0 1 2)"), a5.labels.index("(1 2 3)")])
    factors = [[0], list(a4.elements), list(range(a5.order))]
    normal_count, forms = 0, set()

    for choice in product(factors, repeat=WIDTH + 1):
        if reduce(operator.mul, (len(f) for f in choice)) > WINDOW_LIMIT:
            continue
        window = Subgroup(power, elements=[power.encode(word) for word in product(*choice)])
        if not _power_conjugates_into(power, window):
            assert any(len(f) == a4.order for f in choice)
            continue
        normal_count += 1
        shift = from_window(a5, WIDTH, window)
        assert is_normal_in(shift, full)
        forms.add(_kernel_form(shift, kernels))

    assert a4.order == 12
    assert normal_count == 7
    assert forms == {0, 1, 2}
