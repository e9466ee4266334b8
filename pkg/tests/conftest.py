import numpy as np
import pytest

from hhfrac import Interval, parse_function, parse_weight

# hypothesis profile kept small: the engine calls run adaptive quadrature
try:
    from hypothesis import settings

    settings.register_profile("default", max_examples=40, deadline=None)
    settings.load_profile("default")
except ImportError:  # pragma: no cover
    pass


@pytest.fixture
def unit():
    return Interval(0.0, 1.0)


@pytest.fixture
def square():
    return parse_function("pow:2")


@pytest.fixture
def one(unit):
    return parse_weight("one", unit)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
