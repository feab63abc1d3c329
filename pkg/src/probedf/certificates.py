"""Negative certificates built from roles and the auxiliary graph."""

from __future__ import annotations

from dataclasses import dataclass

from .aux_bipartite import AuxBipartite, PipelineError
from .graph import Graph
from .lucs import Role, RoleState
from .templates import S2, S4, t_indicator

# cross-edge score by (type of scored vertex, type of its neighbor)
_SCORE = {
    (Role.TIP, Role.TIP): 10,
    (Role.TIP, Role.NOTIP): 7,
    (Role.NOTIP, Role.TIP): 6,
    (Role.NOTIP, Role.NOTIP): 2,
}


@dataclass(frozen=True)
class CertScore:
    t: dict[int, int]
    rho1: int


def detect_h4(g: Graph, st: RoleState, b: AuxBipartite, counter=None) -> list[int] | None:
    """Find ``[x, u, z, y, r]``: a diamond with tips ``x, y`` plus ``r`` seeing only the tips.

    For each non-tip ``r``, count how many of its tip neighbors each
    representative covers; any representative hit twice whose clique pair
    misses ``r`` entirely yields the sequence.
    """
    N = st.N
    cnt: dict[int, int] = {}
    first: dict[int, int] = {}
    second: dict[int, int] = {}
    for r in range(g.n):
        if r in N:
            continue
        touched = []
        for x in g.adj[r]:
            if x not in N:
                continue
            reps = b.adj_n[x]
            if counter is not None:
                counter.aux_edges_touched += len(reps)
            for a in reps:
                c = cnt.get(a, 0)
                if c == 0:
                    cnt[a] = 1
                    first[a] = x
                    touched.append(a)
                elif c == 1:
                    cnt[a] = 2
                    second[a] = x
        found = None
        for a in touched:
            if cnt[a] == 2:
                u, z = b.rep_of(a)
                if not g.has_edge(r, u) and not g.has_edge(r, z):
                    found = [first[a], u, z, second[a], r]
                    break
        for a in touched:
            del cnt[a]
        if found is not None:
            return found
    return None


def check_n_independent(g: Graph, st: RoleState) -> tuple[int, list[int]] | None:
    """``None`` if no edge joins two tips, else a certificate for the first such edge."""
    role = st.role
    for v, w in g.edges():
        if role[v] == Role.TIP and role[w] == Role.TIP:
            return build_certificate(g, st, v, w)
    return None


def cert_score(g: Graph, st: RoleState, v: int, w: int) -> CertScore:
    d1 = [v, *st.witnesses(v)]
    d2 = [w, *st.witnesses(w)]
    role = st.role
    t = {}
    for mine, other in ((d1, d2), (d2, d1)):
        for x in mine:
            t[x] = sum(_SCORE[role[x], role[y]] for y in other if g.has_edge(x, y))
    return CertScore(t, sum(t[x] for x in d1))


def build_certificate(g: Graph, st: RoleState, v: int, w: int) -> tuple[int, list[int]]:
    """Certificate for the adjacent tips ``v, w``: S2, S4 or one of T1..T10.

    ``(v, co-tip, a1, a2)`` and ``(w, co-tip, b1, b2)`` are the stored
    witness diamonds; their cross-adjacency scores select the template.
    """
    p, a1, a2 = st.witnesses(v)
    q, b1, b2 = st.witnesses(w)
    if p == q:
        return S2, [p, a1, a2, b1, b2, v, w]
    d1 = (v, p, a1, a2)
    d2 = (w, q, b1, b2)
    if set(d1) & set(d2):
        raise PipelineError(f"witness diamonds of {v} and {w} overlap")
    sc = cert_score(g, st, v, w)
    t = sc.t
    xstar = max(d1 + d2, key=lambda x: t[x])
    top = t[xstar]
    if top == 14:
        return S2, [xstar, a1, a2, b1, b2, v, w]
    if top == 20:
        z = w if xstar in d1 else v
        return S4, [z, *st.witnesses(z)[1:], st.wit1[z], xstar]
    if top > 10:
        raise PipelineError(f"unexpected score {top} for edge {v}-{w}")
    _check_matching(g, d1, d2)
    rho = sc.rho1
    if rho == 10:
        i, q_ = 1, [a1, a2, v, w, b1, b2, p, q]
    elif rho == 12:
        if t[a1] == 0:
            a1, a2 = a2, a1
        if t[b1] == 0:
            b1, b2 = b2, b1
        i, q_ = 2, [a1, b1, a2, v, w, b2, p, q]
    elif rho == 20:
        i, q_ = 3, [a1, a2, v, p, w, q, b1, b2]
    elif rho == 16:
        if t[a1] == 0:
            a1, a2 = a2, a1
        i, q_ = 4, [a1, a2, v, q, w, b1, b2, p]
    elif rho == 17:
        if t[b1] == 0:
            b1, b2 = b2, b1
        i, q_ = 4, [b1, b2, w, p, v, a1, a2, q]
    elif rho == 14:
        if not g.has_edge(a1, b1):
            b1, b2 = b2, b1
        i, q_ = 5, [a1, a2, b1, b2, v, w, p, q]
    elif rho == 18:
        if t[a1] > t[a2]:
            a1, a2 = a2, a1
        if t[b1] == 0:
            b1, b2 = b2, b1
        i, q_ = 6, [a1, a2, b1, v, q, w, b2, p]
    elif rho == 19:
        if t[a1] == 0:
            a1, a2 = a2, a1
        if t[b1] > t[b2]:
            b1, b2 = b2, b1
        i, q_ = 6, [b1, b2, a1, w, p, v, a2, q]
    elif rho == 22:
        if t[a1] == 0:
            a1, a2 = a2, a1
        if t[b1] == 0:
            b1, b2 = b2, b1
        i, q_ = 7, [a1, b1, a2, v, p, w, q, b2]
    elif rho == 23:
        if t[a1] == 0:
            a1, a2 = a2, a1
        if t[b1] == 0:
            b1, b2 = b2, b1
        i, q_ = 8, [a1, b1, p, q, a2, v, b2, w]
    elif rho == 24:
        if not g.has_edge(a1, b1):
            b1, b2 = b2, b1
        i, q_ = 9, [a1, a2, b1, b2, v, p, w, q]
    elif rho == 25:
        if t[a1] > t[a2]:
            a1, a2 = a2, a1
        if t[b1] > t[b2]:
            b1, b2 = b2, b1
        i, q_ = 10, [a1, a2, b1, b2, p, v, q, w]
    else:
        raise PipelineError(f"unexpected rho {rho} for edge {v}-{w}")
    return t_indicator(i), q_


def _check_matching(g: Graph, d1, d2) -> None:
    for x in d1 + d2:
        other = d2 if x in d1 else d1
        if sum(1 for y in other if g.has_edge(x, y)) > 1:
            raise PipelineError("cross edges between witness diamonds are not a matching")
