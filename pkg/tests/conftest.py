import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from probedf.generators import planted_no, planted_yes  # noqa: E402
from probedf.graph import Graph  # noqa: E402

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def sparse_graphs(draw, min_n=1, max_n=64, max_degree=6):
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(0, n * max_degree // 2))
    raw = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=m))
    edges = {(min(u, v), max(u, v)) for u, v in raw if u != v}
    return Graph(n, sorted(edges))


# members with plenty of diamonds, and non-members with a planted obstruction
members = st.builds(planted_yes, st.integers(4, 40), st.integers(0, 2**32))
non_members = st.builds(
    planted_no, st.integers(9, 40), st.integers(0, 2**32), st.one_of(st.none(), st.integers(1, 17))
)


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, combinations(range(n), 2))


DIAMOND = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
# P4 1-2-3-4 (vertices 1..4) plus universal vertex 0
GEM = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
BOWTIE = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


@pytest.fixture
def diamond():
    return DIAMOND


@pytest.fixture
def gem():
    return GEM


# one line per acceptance criterion, printed after the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
