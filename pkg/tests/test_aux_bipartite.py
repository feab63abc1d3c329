import networkx as nx
import pytest
from conftest import BOWTIE, DIAMOND, cycle, graphs, members
from hypothesis import given
from hypothesis import strategies as st

from probedf.aux_bipartite import AuxBipartite, PipelineError, build_aux, find_six_cycle
from probedf.lucs import LucsViolation, RoleState, assign_roles
from probedf.templates import S3, TEMPLATES


def aux_of(g):
    return build_aux(g, assign_roles(g))


def bipartite(n, rows):
    """Auxiliary graph with ``n`` vertices and one representative per row of tips."""
    adj_n = [[] for _ in range(n)]
    for a, row in enumerate(rows, n):
        for s in row:
            adj_n[s].append(a)
    reps = tuple((0, 1) for _ in rows)
    return AuxBipartite(n, reps, tuple(tuple(r) for r in rows), tuple(tuple(r) for r in adj_n))


def test_diamond():
    b = aux_of(DIAMOND)
    assert b.rep_count == 1
    assert b.rep_of(4) == (1, 2)
    assert b.neighbors(4) == (0, 3)
    assert b.adj_n == ((4,), (), (), (4,))
    assert b.tips == [0, 3]
    assert b.edges() == [(4, 0), (4, 3)]


@pytest.mark.parametrize("g", [BOWTIE, cycle(6)])
def test_diamond_free_has_no_representatives(g):
    b = aux_of(g)
    assert b.rep_count == 0 and b.edge_count() == 0


def test_s3_gives_a_six_cycle():
    g = TEMPLATES[S3].graph()
    b = aux_of(g)
    assert b.rep_count == 3
    h = nx.Graph(b.edges())
    assert nx.is_isomorphic(h, nx.cycle_graph(6))
    cyc = find_six_cycle(b)
    assert cyc is not None and cyc[0] < g.n


class TestSixCycle:
    def test_plain_cycle(self):
        b = bipartite(3, [(0, 1), (1, 2), (0, 2)])
        cyc = find_six_cycle(b)
        assert cyc[0] == 0
        assert sorted(cyc) == [0, 1, 2, 3, 4, 5]
        for i in range(6):
            x, y = cyc[i], cyc[(i + 1) % 6]
            assert y in b.neighbors(x)

    def test_path(self):
        b = bipartite(3, [(0, 1), (1, 2), (2,)])
        assert find_six_cycle(b) is None

    def test_tree_from_diamond(self):
        assert find_six_cycle(aux_of(DIAMOND)) is None

    def test_four_cycle_is_an_internal_error(self):
        b = bipartite(2, [(0, 1), (0, 1)])
        with pytest.raises(PipelineError):
            find_six_cycle(b)

    def test_longer_cycle_is_ignored(self):
        b = bipartite(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert find_six_cycle(b) is None


def _lucs_state(g):
    st = assign_roles(g)
    if isinstance(st, LucsViolation) or st.conflict is not None:
        return None
    return st


@given(st.one_of(graphs(max_n=9), members))
def test_structure(g):
    st = _lucs_state(g)
    if st is None:
        return
    b = build_aux(g, st)
    blocks = {blk.S for blk in st.blocks}
    for a in range(g.n, g.n + b.rep_count):
        i, j = b.rep_of(a)
        assert i < j and g.has_edge(i, j)
        assert b.neighbors(a) in blocks
        for s in b.neighbors(a):
            assert a in b.neighbors(s)
    hoods = [frozenset(row) for row in b.adj_a]
    assert len(set(hoods)) == len(hoods)
    assert b.edge_count() <= 2 * g.m
    assert set(b.tips) <= st.N


@given(st.one_of(graphs(max_n=8), members), st.randoms(use_true_random=False))
def test_isomorphism_invariance(g, rnd):
    st = _lucs_state(g)
    if st is None:
        return
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    b1, b2 = build_aux(g, st), build_aux(h, _lucs_state(h))
    assert isinstance(_lucs_state(h), RoleState)
    n1, n2 = nx.Graph(b1.edges()), nx.Graph(b2.edges())
    for b, x in ((b1, n1), (b2, n2)):
        nx.set_node_attributes(x, {v: v < b.n for v in x.nodes}, "side")
    assert nx.is_isomorphic(n1, n2, node_match=lambda p, q: p["side"] == q["side"])
    # the map itself carries tips to tips
    assert sorted(perm[s] for s in b1.tips) == b2.tips
