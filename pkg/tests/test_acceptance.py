"""Acceptance criteria 1 to 9, each run at its stated time budget.

Every criterion prints one ``PASS``/``FAIL`` line, visible even when pytest
captures output.
"""
import pytest

from extclass.verify import CHECKS, run_checks

CRITERIA = sorted({c.criterion for c in CHECKS})


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{k}" for k in CRITERIA])
def test_criterion(criterion, capsys):
    names = {c.name for c in CHECKS if c.criterion == criterion}
    results = run_checks(names)
    passed = all(r.passed for r in results)
    parts = [f"{r.name} {'ok' if r.ok else 'failed'} {r.seconds:.2f}s/{r.budget:.0f}s" for r in results]
    with capsys.disabled():
        print(f"\n{'PASS' if passed else 'FAIL'} criterion {criterion}: " + "; ".join(parts))
    for r in results:
        assert r.ok, f"{r.name}: {r.detail}"
        assert r.within_budget, f"{r.name} took {r.seconds:.1f}s, budget {r.budget:.0f}s"


def test_every_criterion_is_covered():
    assert CRITERIA == list(range(1, 10))
