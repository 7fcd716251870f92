"""Acceptance battery: every headline quantity, exact, with the stated
time budgets.  One pass/fail line is printed per criterion (run pytest
with -s to see them all)."""

import pytest

from tanglekit.acceptance import (
    DEFAULT_SEED,
    check_coloring_groups,
    check_coxeter_quotient,
    check_exceptional_burnside,
    check_fundamental_kei_sizes,
    check_jones_obstruction,
    check_kei_cardinalities,
    check_reduction_chains,
    check_scope_note,
    suite_five_halves_move,
    suite_power_insertion_burnside,
    suite_power_insertion_coloring,
    suite_power_insertion_jones,
)

SUITE_INSTANCES = 200


def report(result, budget):
    status = "PASS" if result.passed else "FAIL"
    print(
        f"[{status}] criterion {result.criterion}: {result.name} "
        f"({result.seconds:.2f}s, budget {budget}s) - {result.detail}"
    )
    assert result.passed, result.detail
    assert result.seconds < budget, f"{result.name} exceeded {budget}s"


def test_criterion_1_coxeter_quotient():
    report(check_coxeter_quotient(), 5)


def test_criterion_2_reduction_chains():
    report(check_reduction_chains(), 1)


def test_criterion_3_kei_cardinalities():
    report(check_kei_cardinalities(), 120)


def test_criterion_4_exceptional_burnside():
    report(check_exceptional_burnside(), 120)


def test_criterion_5_fundamental_kei_sizes():
    report(check_fundamental_kei_sizes(), 10)


def test_criterion_6_coloring_groups():
    report(check_coloring_groups(), 5)


def test_criterion_7_jones_obstruction():
    report(check_jones_obstruction(), 1)


@pytest.fixture(scope="module")
def move_suites():
    results = [
        suite_five_halves_move(DEFAULT_SEED, SUITE_INSTANCES),
        suite_power_insertion_coloring(DEFAULT_SEED, SUITE_INSTANCES),
        suite_power_insertion_jones(DEFAULT_SEED, SUITE_INSTANCES),
        suite_power_insertion_burnside(DEFAULT_SEED, SUITE_INSTANCES),
    ]
    return results


def test_criterion_8_move_invariance_suites(move_suites):
    total = sum(r.seconds for r in move_suites)
    for r in move_suites:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] criterion 8: {r.name} ({r.seconds:.2f}s) - {r.detail}")
        assert r.passed, r.detail
        assert f"instances={SUITE_INSTANCES}" in r.detail
    print(f"criterion 8 total: {total:.2f}s (budget 120s)")
    assert total < 120


def test_criterion_9_scope_note():
    r = check_scope_note()
    print(f"[PASS] criterion 9: {r.name} - {r.detail}")
    assert r.passed
