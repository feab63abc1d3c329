import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from probedf.generators import generate, gnp, planted_no, planted_yes, random_diamond_free
from probedf.graph import Graph, is_diamond_free
from probedf.oracle import oracle_forbidden
from probedf.recognizer import recognize
from probedf.templates import TEMPLATES


def test_gnp_extremes():
    assert gnp(10, 0.0, 1).m == 0
    assert gnp(6, 1.0, 1).m == 15
    assert gnp(1, 0.5, 1).m == 0


def test_gnp_density():
    g = gnp(2000, 0.01, 3)
    expected = 0.01 * 2000 * 1999 / 2
    assert abs(g.m - expected) < 5 * expected**0.5


def test_gnp_is_seeded():
    assert gnp(50, 0.3, 9) == gnp(50, 0.3, 9)
    assert gnp(50, 0.3, 9) != gnp(50, 0.3, 10)


@pytest.mark.parametrize("n, p", [(-1, 0.5), (5, 1.5), (5, -0.1)])
def test_gnp_rejects(n, p):
    with pytest.raises(ValueError):
        gnp(n, p, 0)


@given(st.integers(2, 60), st.integers(0, 2**32))
def test_clique_packing_is_diamond_free(n, seed):
    adj = random_diamond_free(n, random.Random(seed))
    g = Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
    assert is_diamond_free(g) is True


def test_planted_yes_example():
    assert recognize(planted_yes(20, 7)).member


def test_planted_no_example():
    g = planted_no(20, 7, indicator=9)
    assert not recognize(g).member
    assert not oracle_forbidden(g).member


@pytest.mark.parametrize("ind", sorted(TEMPLATES))
def test_planted_no_each_template(ind):
    for seed in range(5):
        assert not recognize(planted_no(30, seed, indicator=ind)).member


def test_planted_yes_degree_target():
    g = planted_yes(400, 1, avg_degree=20)
    assert 0.7 * 4000 < g.m < 4000 * 1.05


def test_planted_rejects():
    with pytest.raises(ValueError):
        planted_no(6, 0, indicator=17)
    with pytest.raises(ValueError):
        planted_no(20, 0, indicator=18)
    with pytest.raises(ValueError):
        planted_yes(-1, 0)


def test_generate_dispatch():
    assert generate("gnp", 10, 1, p=0.0).m == 0
    assert generate("planted-yes", 15, 2) == planted_yes(15, 2)
    assert generate("planted-no", 15, 2, indicator=1) == planted_no(15, 2, 1)
    with pytest.raises(ValueError):
        generate("grid", 10, 1)
