import pytest

from ringline import build_line, builtin_ring, make_gf, r_triangle


@pytest.fixture(scope="session")
def R():
    return r_triangle()


@pytest.fixture(scope="session")
def line(R):
    return build_line(R)


@pytest.fixture(scope="session")
def gf2():
    return make_gf(2)


@pytest.fixture(scope="session")
def gf22():
    return builtin_ring("GF2xGF2")


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
