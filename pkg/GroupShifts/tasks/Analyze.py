from GroupShifts.constants import DEFAULT_PERIOD_BOUND
from GroupShifts.group_shift import GroupShift, periodic_count
from GroupShifts.sigma_topology import is_sigma_connected, is_sigma_infinitesimal, sigma_components
from GroupShifts.tasks import Task


class Analyze(Task):
    def __call__(self, shift: GroupShift, context: dict = None) -> dict:
        """
        Limit degree, entropy, minimal step, sigma-components, head and periodic point counts.

        :return:
        """
        period_bound = (context or {}).get("period_bound", DEFAULT_PERIOD_BOUND)
        components = sigma_components(shift)
        head_group, head_sigma = components.head

        return {
            "limit_degree": shift.limit_degree,
            "entropy_log": shift.entropy,
            "minimal_step": shift.minimal_step,
            "sigma_components": components.count,
            "head_order": head_group.order,
            "head_sigma_bijective": head_sigma.is_bijective(),
            "is_sigma_connected": is_sigma_connected(shift),
            "is_sigma_infinitesimal": is_sigma_infinitesimal(shift),
            "periodic_counts": [periodic_count(shift, p) for p in range(1, period_bound + 1)]
        }
