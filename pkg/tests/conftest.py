import pytest

from petit.chainring import F4, F8, GR42, frobenius_lift, inner_derivation
from petit.skewpoly import SkewPolyContext


@pytest.fixture(scope="session")
def f4():
    R = F4()
    return SkewPolyContext(R, frobenius_lift(R, 1))


@pytest.fixture(scope="session")
def gr42():
    R = GR42()
    return SkewPolyContext(R, frobenius_lift(R, 1))


@pytest.fixture(scope="session")
def gr42_inner():
    R = GR42()
    s = frobenius_lift(R, 1)
    return SkewPolyContext(R, s, inner_derivation(R.gen, s))


@pytest.fixture(scope="session")
def f8():
    R = F8()
    return SkewPolyContext(R, frobenius_lift(R, 1))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        res = RESULTS[number]
        mark = "PASS" if res.passed else "FAIL"
        terminalreporter.write_line(
            f"criterion {number:>2}: {mark}  {res.title}  ({res.elapsed:.2f} s)")
        for c in res.failures():
            detail = f" [{c.detail}]" if c.detail else ""
            terminalreporter.write_line(f"    failed: {c.name}{detail}")
