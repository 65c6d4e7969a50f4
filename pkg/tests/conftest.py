import pytest
from hypothesis import settings

from casson.symplectic import HomologyVector

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def a(i, g=3):
    return HomologyVector.a(i, g)


def b(i, g=3):
    return HomologyVector.b(i, g)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
