"""One test per acceptance criterion, at exact equality.

Each criterion's sub-checks are listed on failure, and a one-line verdict per
criterion is printed in the terminal summary.
"""

import pytest

from petit.acceptance import CRITERIA, run_criterion

RESULTS = {}


@pytest.mark.parametrize("number", [n for n, *_ in CRITERIA],
                         ids=[f"criterion_{n:02d}" for n, *_ in CRITERIA])
def test_criterion(number):
    res = run_criterion(number)
    RESULTS[number] = res
    line = f"criterion {number:>2} [{'PASS' if res.passed else 'FAIL'}] {res.title}"
    print(line)
    failed = "; ".join(f"{c.name} ({c.detail})" if c.detail else c.name for c in res.failures())
    assert res.passed, f"{line}: {failed}"
