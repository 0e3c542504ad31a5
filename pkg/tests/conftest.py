import sys

import pytest

from leibniz import corpus
from leibniz.classify import canonical_algebra


@pytest.fixture(scope="session")
def algs():
    return corpus.algebras()


@pytest.fixture
def L2i():
    return canonical_algebra("(i)")


@pytest.fixture
def L2ii():
    return canonical_algebra("(ii)")


@pytest.fixture
def heis3():
    return corpus.algebra("heis3")


@pytest.fixture
def sl2():
    return corpus.algebra("sl2")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
