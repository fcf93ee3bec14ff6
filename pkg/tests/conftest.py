import pytest
from hypothesis import settings

from weylpi.scalar import Char

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ZERO, F2, F3, F5 = Char(0), Char(2), Char(3), Char(5)


@pytest.fixture(params=[ZERO, F2, F3, F5], ids=lambda c: repr(c))
def char(request):
    return request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
