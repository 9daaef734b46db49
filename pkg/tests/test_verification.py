import json

import pytest

from orbit_duality.errors import DomainError
from orbit_duality.partitions import GroupType
from orbit_duality.verification import (
    SUITES,
    SuiteReport,
    basic_form_counterexamples,
    check_axioms,
    check_blocks,
    check_collapse_oracle,
    check_cupvee,
    check_labels,
    check_reflection,
    check_special_alt,
    check_theorem_po,
    run_suite,
    sizes,
)


def test_report_rendering():
    rep = SuiteReport("demo")
    rep.check(True, "x", 1, 1)
    rep.check(False, "b", 1, 2)
    rep.check(False, "a", 3, 4)
    assert not rep.passed and rep.instances_checked == 3
    data = json.loads(rep.to_json())
    assert [f["input"] for f in data["failures"]] == ["a", "b"]
    assert rep.to_text().startswith("FAIL demo: 3 checks, 2 failures")


def test_sizes():
    assert list(sizes(GroupType.B, 7)) == [1, 3, 5, 7]
    assert list(sizes(GroupType.C, 7, 2)) == [2, 4, 6]


@pytest.mark.parametrize("check", [
    lambda: check_collapse_oracle(10),
    lambda: check_cupvee(9),
    lambda: check_special_alt(10),
    lambda: check_blocks(10),
])
def test_small_suites_pass(check):
    rep = check()
    assert rep.instances_checked > 0
    assert rep.passed, rep.to_text()


@pytest.mark.parametrize("X", list(GroupType))
def test_per_type_suites_pass(X):
    for rep in (check_labels(X, 9), check_theorem_po(X, 10), check_axioms(X, 10), check_reflection(X, 9 if X is GroupType.B else 8)):
        assert rep.passed, rep.to_text()


def test_run_suite_names():
    assert {"collapse", "cupvee", "po", "axioms", "blocks"} <= set(SUITES)
    reports = run_suite("all", 6)
    assert [r.suite_name for r in reports] == list(SUITES)
    with pytest.raises(DomainError):
        run_suite("nope", 4)


def test_literal_basic_formula_fails_in_type_c(mk):
    # first C basic block with two genuine marks
    bad = basic_form_counterexamples(12)
    assert bad and bad[0][0] == mk("C", [4, 4, 2, 2], [4, 2])
    assert all(mp.group_type is GroupType.C and len(mp.nu) == 2 for mp, _, _ in bad)
