from pathlib import Path

import pytest
from hypothesis import strategies as st

from nkdl.formats import read_graph_file
from nkdl.graph_core import Graph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


TWO_TRIANGLES = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
CUBE = Graph(8, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7),
                 (0, 4), (1, 5), (2, 6), (3, 7)])
MOBIUS = Graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])


@pytest.fixture
def cube():
    return CUBE


@pytest.fixture
def mobius():
    return MOBIUS


@pytest.fixture(scope="session")
def sample8():
    return read_graph_file(FIXTURES / "sample8.el")


@st.composite
def graphs(draw, min_n=0, max_n=10, density=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if density is None:
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        mask = [draw(st.floats(0, 1)) < density for _ in pairs]
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def graph_and_permutation(draw, **kw):
    g = draw(graphs(**kw))
    perm = draw(st.permutations(range(g.n)))
    return g, list(perm)


def random_graph(rng, n, p):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def pytest_terminal_summary(terminalreporter):
    reports = [r for key in ("passed", "failed") for r in terminalreporter.stats.get(key, [])
               if getattr(r, "when", None) == "call" and "test_acceptance.py" in r.nodeid]
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(reports, key=lambda r: r.nodeid):
        detail = dict(r.user_properties).get("detail", "")
        line = f"{'PASS' if r.passed else 'FAIL'}  {r.nodeid.split('::')[-1]}"
        terminalreporter.write_line(f"{line}  ({detail})" if detail else line)
