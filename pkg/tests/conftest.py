import pytest

from richklt import weyl
from richklt.cartan import builtin_gcm, type_a


def el(g, text=""):
    return weyl.canonicalize(g, weyl.parse_word(text))


@pytest.fixture
def A2():
    return type_a(2)


@pytest.fixture
def A3():
    return type_a(3)


@pytest.fixture
def B2():
    return builtin_gcm("B2")


@pytest.fixture
def A1t():
    return builtin_gcm("A1~")


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
