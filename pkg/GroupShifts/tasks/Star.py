from GroupShifts.constants import DEFAULT_PERIOD_BOUND
from GroupShifts.decomposition import decompose, verify_series
from GroupShifts.exceptions import VerificationFailure
from GroupShifts.finite_group import simple_group_tag
from GroupShifts.group_shift import GroupShift
from GroupShifts.two_sided import star, star_series, two_sided_periodic_count, verify_star_series
from GroupShifts.tasks import Task


class Star(Task):
    def __call__(self, shift: GroupShift, context: dict = None) -> dict:
        """
        The two-sided shift on the same window and the starred decomposition series.

        :raises VerificationFailure: When the one-sided series does not verify.
        :return:
        """
        period_bound = (context or {}).get("period_bound", DEFAULT_PERIOD_BOUND)
        two_sided = star(shift)
        report = {
            "limit_degree": two_sided.limit_degree,
            "minimal_step": two_sided.minimal_step,
            "is_trivial": len(two_sided.edges) == 1,
            "periodic_counts": [two_sided_periodic_count(two_sided, p) for p in range(1, period_bound + 1)]
        }

        series = decompose(shift)
        found = verify_series(shift, series)
        if not found.passed:
            raise VerificationFailure(found.failures)

        starred = star_series(series)
        verdict = verify_star_series(starred)
        report["series"] = {
            "head_order": starred.head[0].order,
            "chain_length": len(starred.chain),
            "factors": sorted(simple_group_tag(f) for f in starred.factors),
            "verified": verdict.passed,
            "failures": verdict.failures
        }
        return report
