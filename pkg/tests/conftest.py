import mpmath
import pytest

from eulerseries import make_context


@pytest.fixture(scope="session")
def ctx30():
    return make_context(30)


@pytest.fixture(scope="session")
def ctx40():
    return make_context(40)


@pytest.fixture(scope="session")
def oracle():
    """mpmath at 80 digits: an outside check independent of the package."""
    mp = mpmath.MPContext()
    mp.dps = 80
    return mp


# one line per acceptance criterion at the end of the run

_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _criteria[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda n: int(n.split("_")[1][1:]) if n.split("_")[1][1:].isdigit() else 99):
        status = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
