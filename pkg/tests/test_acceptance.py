"""Acceptance suite: every exit criterion at its stated tolerance.

Each criterion runs the corresponding registered verification tasks and
prints one pass/fail line.  All comparisons are exact; nothing is deferred
to later calibration.
"""

import time

import pytest

from modlie import tasks

SEED = 2026


def _run(criterion: str, task_ids: list[str]):
    t0 = time.time()
    failures = []
    for tid in task_ids:
        res = tasks.run_task(tid, seed=SEED)
        for c in res.checks:
            if not c.passed:
                failures.append(f"{tid}: {c.name}: expected {c.expected}, got {c.got}")
    status = "PASS" if not failures else "FAIL"
    print(f"[{status}] {criterion} ({time.time() - t0:.1f}s)")
    assert not failures, "\n".join(failures)


def test_criterion_01_construction_sweep():
    _run("criterion 1: construction sweep", ["construction-sweep"])


def test_criterion_02_centralizer_tables():
    _run("criterion 2: centralizer-table sweep",
         [f"table-centralizers-{g}" for g in ("G2", "F4", "E6", "E7", "E8")])


def test_criterion_03_e8p5_maximal_tower():
    _run("criterion 3: E8 p=5 non-semisimple maximal subalgebra", ["thm-e8p5non"])


def test_criterion_04_e8p5_weisfeiler():
    _run("criterion 4: E8 p=5 filtration and graded algebra", ["thm-weise8"])


def test_criterion_05_nonrestricted_witt():
    _run("criterion 5: E8 p=5 non-restricted Witt closure", ["thm-nonrestrictedwitt"])


def test_criterion_06_ermolaev():
    _run("criterion 6: F4 p=3 exotic maximal subalgebra", ["thm-ermax"])


def test_criterion_07_f4_e6_p3():
    _run("criterion 7: F4/E6 p=3 towers and filtrations",
         ["thm-nonf4", "thm-weisf4", "thm-none6"])


def test_criterion_08_e7_e8_p3():
    _run("criterion 8: E7/E8 p=3 towers, ideals and graded radicals",
         ["thm-none7", "thm-none8"])


def test_criterion_09_ch41():
    _run("criterion 9: E8 p=3 centralizer quotient tower", ["thm-ch41"])


def test_criterion_10_p2_a1cubed():
    _run("criterion 10: p=2 triple-A1 family", ["thm-p2newmax"])


def test_criterion_11_p2_a1fourth():
    _run("criterion 11: p=2 quadruple-A1 family", ["thm-e17a4", "thm-a14e8"])


def test_criterion_12_specialmax():
    _run("criterion 12: p=2 dimension-124 maximal pairs", ["thm-specialmax"])


def test_criterion_13_cartan_suite():
    _run("criterion 13: Cartan/exotic dimension-formula suite",
         ["cartan-dimension-suite"])


def test_criterion_14_witt_search():
    _run("criterion 14: Witt-search property suite", ["witt-search-suite"])
