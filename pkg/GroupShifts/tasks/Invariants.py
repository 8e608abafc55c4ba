from fractions import Fraction
from typing import Union
from GroupShifts.constants import DEFAULT_PERIOD_BOUND
from GroupShifts.decomposition import conjugacy_normal_form
from GroupShifts.group_shift import GroupShift
from GroupShifts.sigma_topology import conjugacy_invariants
from GroupShifts.tasks import Task


def render_fraction(value: Fraction) -> Union[int, str]:
    if value.denominator == 1:
        return value.numerator
    return "{}/{}".format(value.numerator, value.denominator)


class Invariants(Task):
    def __call__(self, shift: GroupShift, context: dict = None) -> dict:
        """
        Periodic point invariants next to the constructive normal form.

        :return:
        """
        context = context or {}
        invariants = conjugacy_invariants(shift,
                                          P=context.get("period_bound", DEFAULT_PERIOD_BOUND),
                                          ell_bound=context.get("ell_bound"))
        normal_form = conjugacy_normal_form(shift)

        return {
            "d": invariants.d,
            "fixed_alphabet_check": invariants.fixed_alphabet_check,
            "f": [render_fraction(x) for x in invariants.f],
            "cycle_counts": [render_fraction(x) for x in invariants.cycle_counts],
            "consistent": invariants.consistent,
            "ell": invariants.ell,
            "normal_form": {
                "ell": normal_form.ell,
                "alphabet_size": normal_form.alphabet_size,
                "cycle_lengths": normal_form.cycle_lengths
            }
        }
