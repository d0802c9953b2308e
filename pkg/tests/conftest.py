import pytest

from atr import _scan_py
from atr.affixes import AffixTable

try:
    from atr import _scan
except ImportError:  # extension not built
    _scan = None

KERNELS = [pytest.param(_scan_py, id="python")]
if _scan is not None:
    KERNELS.append(pytest.param(_scan, id="cython"))


@pytest.fixture(params=KERNELS, scope="session")
def kernel(request):
    return request.param


@pytest.fixture
def example_table():
    """Minimal table reproducing the segments of the worked example."""
    return AffixTable.from_lists(["ap", "ret"], ["ate", "al"])


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion" in rep.nodeid:
                rows.append((rep.nodeid.split("::", 1)[1], outcome, rep.duration))
    if rows:
        terminalreporter.section("acceptance criteria")
        for name, outcome, duration in sorted(rows):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}  ({duration:.2f}s)")
