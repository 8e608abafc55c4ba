from GroupShifts.decomposition import decompose, verify_series
from GroupShifts.finite_group import simple_group_tag
from GroupShifts.group_shift import GroupShift, point_count
from GroupShifts.morphisms import SlidingBlockCode
from GroupShifts.tasks import Task


def dump_certificate(code: SlidingBlockCode) -> dict:
    """
    Full block table of a certificate, in element names.
    """
    source, target = code.source.alphabet, code.target.alphabet
    return {
        "anticipation": code.anticipation,
        "factor_order": target.order,
        "table": {" ".join(source.label(x) for x in block): target.label(letter)
                  for block, letter in sorted(code.table.items())}
    }


class Decompose(Task):
    def load_provisioning(self) -> dict:
        return {"prefer_last": bool(self.parameters.get("prefer_last", False))}

    def __call__(self, shift: GroupShift, context: dict = None) -> dict:
        """
        Subnormal series summary with its verification verdict.

        :return:
        """
        context = context or {}
        series = decompose(shift, prefer_last=self.parsed_provisioning["prefer_last"])
        verdict = verify_series(shift, series)

        report = {
            "head_order": series.head[0].order,
            "head_sigma_bijective": series.head[1].is_bijective(),
            "chain_length": len(series.chain),
            "factors": sorted(simple_group_tag(f) for f in series.factors),
            "tail_order": point_count(series.tail),
            "nilpotency_index": series.nilpotency,
            "verified": verdict.passed,
            "failures": verdict.failures
        }
        if context.get("certificates"):
            report["certificates"] = [dump_certificate(c) for c in series.certificates]
        return report
