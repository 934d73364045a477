"""Acceptance criteria at the default bounds (4 points, 8 family members, 8-element lattices).

Each criterion prints one PASS/FAIL line.  Criterion 6 dominates the run time.
"""

import time

import pytest

from pervfrith.suite import TITLES, SuiteConfig, run_criteria

CONFIG = SuiteConfig()
# seconds; criteria without a stated budget get None
TIME_BUDGET = {1: 1.0, 2: 60.0, 3: 60.0}

_results: dict[int, tuple] = {}


def _run(n):
    if n not in _results:
        start = time.perf_counter()
        (res,) = run_criteria(CONFIG, [n])
        _results[n] = (res, time.perf_counter() - start)
    return _results[n]


@pytest.mark.parametrize("n", range(1, 11), ids=lambda n: f"criterion_{n:02d}")
def test_criterion(n, capsys):
    res, elapsed = _run(n)
    budget = TIME_BUDGET.get(n)
    in_time = budget is None or elapsed < budget
    ok = res.passed and in_time
    with capsys.disabled():
        status = "PASS" if ok else "FAIL"
        print(f"\n[{status}] criterion {n}: {TITLES[n]} ({len(res.laws)} laws)")
    for r in res.laws:
        assert r.passed, f"{r.law}: {r.witness}"
    assert in_time, f"took {elapsed:.1f}s, budget {budget}s"
