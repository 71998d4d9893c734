import pytest
from hypothesis import settings

from tropf.catalog import a2_coefficient_free, a2_principal, a3_principal, b2_principal, markov_principal

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

CRITERIA = {
    1: "mutation algebra suite",
    2: "compatible-pair suite",
    3: "A2 enumeration",
    4: "Laurent/positivity smoke",
    5: "G/C determinant suite",
    6: "degree consistency",
    7: "seed-independence audit",
    8: "F-invariant values",
    9: "product criterion",
    10: "sign-coherence",
    11: "Poisson suite",
    12: "Markov matrix identity",
}
_results = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker is None or (report.when != "call" and not report.failed):
        return
    _results.setdefault(marker, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        report.acceptance = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title in CRITERIA.items():
        outcomes = _results.get(number)
        if outcomes is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} ({title}): {status}")


@pytest.fixture
def a2():
    return a2_principal()


@pytest.fixture
def a3():
    return a3_principal()


@pytest.fixture
def b2():
    return b2_principal()


@pytest.fixture
def markov():
    return markov_principal()


@pytest.fixture
def a2_free():
    return a2_coefficient_free()
