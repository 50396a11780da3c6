import mpmath
import pytest

from dfroot.numerics import PrecisionContext

_ACCEPTANCE = {}


@pytest.fixture
def ctx300():
    ctx = PrecisionContext(300)
    with ctx.working():
        yield ctx


@pytest.fixture
def ctx100():
    ctx = PrecisionContext(100)
    with ctx.working():
        yield ctx


@pytest.fixture
def acceptance():
    """Record a criterion verdict; a summary line per criterion is printed at exit."""
    def record(number, passed, detail=""):
        _ACCEPTANCE[number] = (passed, detail)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        passed, detail = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if passed else 'FAIL'}  {detail}")


@pytest.fixture(autouse=True)
def _restore_precision():
    dps = mpmath.mp.dps
    yield
    mpmath.mp.dps = dps
