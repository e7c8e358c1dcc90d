import pytest

from ordcalc.expr import evaluate_text


@pytest.fixture
def O():
    """Parse-and-evaluate shorthand: ``O("w^2 + 1")``."""
    return evaluate_text


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
