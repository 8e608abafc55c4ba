import importlib
import os
import pytest
from GroupShifts.decomposition import SeriesVerdict
from GroupShifts.exceptions import VerificationFailure
from GroupShifts.group_shift import full_shift
from GroupShifts.tasks import Analyze, Decompose, Dot, Invariants, Star, Task
from tests.utilities.testing_constants import C2, PERIOD_BOUND, diagonal_shift, doubling_shift, twisted_shift

CONTEXT = {"period_bound": PERIOD_BOUND, "ell_bound": None}


def test_task_defaults():
    task = Task()

    assert task(full_shift(C2)) == {}
    assert task.cacheable
    assert Task({"a": 1}) == Task({"a": 1})
    assert not Dot.cacheable


def test_analyze():
    report = Analyze()(twisted_shift(), CONTEXT)

    assert report["limit_degree"] == 4
    assert report["minimal_step"] == 1
    assert report["sigma_components"] == 1
    assert report["head_order"] == 1
    assert report["is_sigma_connected"]
    assert not report["is_sigma_infinitesimal"]
    assert len(report["periodic_counts"]) == PERIOD_BOUND
    assert report["periodic_counts"][0] == 4


def test_analyze_default_period_bound():
    report = Analyze()(diagonal_shift())

    assert report["periodic_counts"] == [2] * 8
    assert report["head_order"] == 2


def test_decompose_provisioning():
    assert Decompose().parsed_provisioning == {"prefer_last": False}
    assert Decompose({"prefer_last": True}).parsed_provisioning == {"prefer_last": True}


def test_decompose_report():
    report = Decompose()(twisted_shift(), {"certificates": True})

    assert report["verified"]
    assert report["failures"] == []
    assert report["factors"] == ["C2", "C2"]
    assert report["chain_length"] == 3
    assert report["tail_order"] == 1
    assert len(report["certificates"]) == 2
    assert all(c["factor_order"] == 2 for c in report["certificates"])


def test_decompose_report_without_certificates():
    report = Decompose({"prefer_last": True})(doubling_shift(), CONTEXT)

    assert report["verified"]
    assert report["head_order"] == 2
    assert "certificates" not in report
    assert report["tail_order"] == 4
    assert report["nilpotency_index"] == 1


def test_invariants_report():
    report = Invariants()(full_shift(C2), CONTEXT)

    assert report["d"] == 2
    assert report["f"] == [1] * PERIOD_BOUND
    assert report["consistent"]
    assert report["normal_form"] == {"ell": 0, "alphabet_size": 2, "cycle_lengths": [1]}


def test_star_report():
    report = Star()(diagonal_shift(), CONTEXT)

    assert not report["is_trivial"]
    assert report["periodic_counts"] == [2] * PERIOD_BOUND
    assert report["series"]["verified"]
    assert report["series"]["factors"] == []


def test_star_raises_on_unverified_series(monkeypatch):
    module = importlib.import_module("GroupShifts.tasks.Star")
    monkeypatch.setattr(module, "verify_series", lambda g, s: SeriesVerdict(False, ["forced failure"]))

    with pytest.raises(VerificationFailure) as excep:
        Star()(diagonal_shift(), CONTEXT)
    assert excep.value.failures == ["forced failure"]


def test_dot_report(tmpdir):
    path = str(tmpdir.join("full.dot"))
    report = Dot()(full_shift(C2), {"output": path})

    assert report["states"] == 2
    assert report["edges"] == 4
    assert "digraph" in report["dot"]
    assert "lightgrey" in report["dot"]
    assert os.path.exists(path)


@pytest.mark.parametrize("task", [Analyze, Invariants])
def test_reports_are_plain_data(task):
    report = task()(twisted_shift(), CONTEXT)

    for value in report.values():
        assert isinstance(value, (bool, int, float, str, list, dict, type(None)))
