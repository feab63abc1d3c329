"""LUCS verification and tip / non-tip role assignment.

A graph is LUCS when every connected component of every open neighborhood
is complete split. Each non-special component (independent side of size at
least two) yields induced diamonds: its independent side are tips, its
clique side and the anchor are non-tips. One scan assigns those roles with
diamond witnesses, collects the candidate nonprobe set and completion
pairs, and records the first vertex forced into both roles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from itertools import combinations

from .complete_split import csda, lucs_obstruction
from .graph import Graph, neighborhood_components
from .templates import S1, S4


class Role(IntEnum):
    UNSET = 0
    TIP = 1
    NOTIP = 2


@dataclass(frozen=True)
class Block:
    """A non-special neighborhood component: anchor, clique side, independent side."""

    anchor: int
    K: tuple[int, ...]
    S: tuple[int, ...]


@dataclass(frozen=True)
class Conflict:
    """The vertex found in both roles and the witnesses of the second diamond."""

    vertex: int
    wit1: int
    wit2: int
    wit3: int


@dataclass
class RoleState:
    """Per-vertex roles and witnesses.

    For a tip ``v``: ``wit1[v]`` is its co-tip and ``wit2[v]``, ``wit3[v]``
    are the degree-3 vertices of the witnessing diamond. For a non-tip:
    ``wit1[v]`` is the other degree-3 vertex and ``wit2[v]``, ``wit3[v]``
    the tips.
    """

    role: list[Role]
    wit1: list[int]
    wit2: list[int]
    wit3: list[int]
    N: set[int] = field(default_factory=set)
    F: set[tuple[int, int]] = field(default_factory=set)
    blocks: list[Block] = field(default_factory=list)
    conflict: Conflict | None = None

    def witnesses(self, v: int) -> tuple[int, int, int]:
        return self.wit1[v], self.wit2[v], self.wit3[v]


@dataclass(frozen=True)
class LucsViolation:
    """A LUCS obstruction: indicator 1 (gem), 2 (W4) or 3 (paw plus apex)."""

    indicator: int
    vertices: list[int]


def assign_roles(g: Graph, counter=None) -> RoleState | LucsViolation:
    """Scan all neighborhoods; return roles, or the first LUCS obstruction found.

    A returned :class:`RoleState` with ``conflict`` set means some vertex is
    a tip of one induced diamond and a non-tip of another.
    """
    n = g.n
    st = RoleState([Role.UNSET] * n, [-1] * n, [-1] * n, [-1] * n)
    role, wit1, wit2, wit3 = st.role, st.wit1, st.wit2, st.wit3
    for v in range(n):
        for comp in neighborhood_components(g, v, counter):
            part = csda(comp)
            if part is None:
                ind, seq = lucs_obstruction(g, v, comp.vertices)
                return LucsViolation(ind, seq)
            K, S = part.K, part.S
            if len(S) < 2:
                continue
            st.blocks.append(Block(v, K, S))
            if st.conflict is not None:
                continue
            # the diamond {w, co-tip, k1, k2} uses the anchor when K is a singleton
            k1 = K[0]
            k2 = K[1] if len(K) > 1 else v
            for w in S:
                if role[w] == Role.UNSET:
                    role[w] = Role.TIP
                    st.N.add(w)
                    wit1[w] = S[1] if w == S[0] else S[0]
                    wit2[w], wit3[w] = k1, k2
                elif role[w] == Role.NOTIP:
                    st.conflict = Conflict(w, S[1] if w == S[0] else S[0], k1, k2)
                    break
            if st.conflict is not None:
                continue
            s1, s2 = S[0], S[1]
            for w in K:
                if role[w] == Role.UNSET:
                    role[w] = Role.NOTIP
                    wit1[w], wit2[w], wit3[w] = v, s1, s2
                elif role[w] == Role.TIP:
                    st.conflict = Conflict(w, v, s1, s2)
                    break
            if st.conflict is None:
                st.F.update(combinations(S, 2))
    return st


def conflict_certificate(g: Graph, st: RoleState) -> tuple[int, list[int]]:
    """Turn a recorded role conflict into an induced S1 (4) or S4 (5)."""
    c = st.conflict
    if c is None:
        raise ValueError("no conflict recorded")
    v = c.vertex
    stored = st.witnesses(v)
    found = (c.wit1, c.wit2, c.wit3)
    # tip_side: v is a tip there (co-tip, non-tip, non-tip)
    # nontip_side: v is a non-tip there (co-non-tip, tip, tip)
    if st.role[v] == Role.TIP:
        tip_side, nontip_side = stored, found
    else:
        tip_side, nontip_side = found, stored
    cotip, u, z = tip_side
    for x in nontip_side:
        if g.has_edge(cotip, x):
            return S4, [v, u, z, cotip, x]
    conontip, t1, t2 = nontip_side
    return S1, [v, u, z, conontip, t1, t2, cotip]
