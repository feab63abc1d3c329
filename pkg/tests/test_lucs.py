import pytest
from conftest import BOWTIE, DIAMOND, GEM, graphs, members, non_members
from hypothesis import given
from hypothesis import strategies as st

from probedf.graph import Graph, induced_ordered
from probedf.lucs import LucsViolation, Role, assign_roles, conflict_certificate
from probedf.templates import S1, S4, TEMPLATES, verify_negative

DIAMOND_EDGES = {(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)}
# two conflicts found by random search; each needs seven vertices
CONFLICT_S4 = Graph(7, [(0, 1), (0, 2), (1, 2), (1, 3), (1, 5), (1, 6), (2, 3), (2, 4), (4, 5), (4, 6), (5, 6)])
CONFLICT_S1 = Graph(7, [(0, 5), (0, 6), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (5, 6)])


def test_diamond_roles():
    st = assign_roles(DIAMOND)
    assert st.role == [Role.TIP, Role.NOTIP, Role.NOTIP, Role.TIP]
    assert st.N == {0, 3}
    assert st.F == {(0, 3)}
    assert st.conflict is None
    # the block at anchor 1 has K = {2}, so the anchor completes the witness diamond
    assert st.witnesses(0) == (3, 2, 1)
    assert st.witnesses(2) == (1, 0, 3)
    assert st.witnesses(1) == (2, 0, 3)


def test_gem_violation():
    res = assign_roles(GEM)
    assert isinstance(res, LucsViolation)
    assert res.indicator == 1
    assert verify_negative(GEM, 1, res.vertices)


def test_bowtie_has_no_roles():
    st = assign_roles(BOWTIE)
    assert st.N == set() and st.F == set() and st.blocks == []


def test_s1_template_conflict():
    g = TEMPLATES[S1].graph()
    st = assign_roles(g)
    ind, q = conflict_certificate(g, st)
    assert ind == S1
    assert verify_negative(g, S1, q)
    # identical to the template order up to the swap of its symmetric positions 2 and 3
    assert q in ([0, 1, 2, 3, 4, 5, 6], [0, 2, 1, 3, 4, 5, 6])


@pytest.mark.parametrize("g, ind", [(CONFLICT_S4, S4), (CONFLICT_S1, S1)])
def test_conflict_certificates(g, ind):
    st = assign_roles(g)
    assert st.conflict is not None
    got, q = conflict_certificate(g, st)
    assert got == ind
    assert verify_negative(g, ind, q)
    assert q[0] == st.conflict.vertex


def test_no_conflict_raises():
    with pytest.raises(ValueError):
        conflict_certificate(DIAMOND, assign_roles(DIAMOND))


def test_two_disjoint_diamonds():
    g = Graph(8, [*DIAMOND.edges(), *((u + 4, v + 4) for u, v in DIAMOND.edges())])
    st = assign_roles(g)
    assert st.conflict is None
    assert st.N == {0, 3, 4, 7}
    assert st.F == {(0, 3), (4, 7)}


@given(st.one_of(graphs(max_n=9), members, non_members))
def test_witness_diamonds(g):
    st = assign_roles(g)
    if isinstance(st, LucsViolation):
        assert verify_negative(g, st.indicator, st.vertices)
        return
    for v in range(g.n):
        if st.role[v] == Role.UNSET:
            assert v not in st.N
            continue
        assert (v in st.N) == (st.role[v] == Role.TIP)
        w1, w2, w3 = st.witnesses(v)
        if st.role[v] == Role.TIP:
            seq = [v, w2, w3, w1]
        else:
            seq = [w2, v, w1, w3]
        assert induced_ordered(g, seq) == DIAMOND_EDGES
    for u, v in st.F:
        assert u < v and not g.has_edge(u, v)
        assert st.role[u] == st.role[v] == Role.TIP
    if st.conflict is not None:
        ind, q = conflict_certificate(g, st)
        assert verify_negative(g, ind, q)
