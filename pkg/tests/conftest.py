import numpy as np
import pytest

from unitary_digraphs import Digraph

# small reference patterns with known answers
TRIANGLE = np.array([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
QUAD_NOT_SQ = np.array([[1, 1, 1, 1], [1, 1, 1, 1], [1, 1, 0, 0], [1, 1, 0, 0]])
LOOP_PAIR = np.array([[1, 1], [1, 0]])
LOOP_PAIR_LINE = np.array([[0, 0, 1], [1, 1, 0], [1, 1, 0]])


@pytest.fixture
def loop_pair():
    """Digraph of [[1,1],[1,0]]: arcs a=(0,0), b=(0,1), c=(1,0)."""
    return Digraph(2, ((0, 0), (0, 1), (1, 0)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line(k))
