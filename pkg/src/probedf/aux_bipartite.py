"""Auxiliary bipartite graph of diamond cliques versus diamond tips."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .lucs import RoleState


class PipelineError(RuntimeError):
    """An internal invariant failed (e.g. a 4-cycle where none can exist)."""


@dataclass(frozen=True)
class AuxBipartite:
    """Representatives ``n, n+1, ...`` on one side, vertices of ``G`` on the other.

    ``rep[a - n]`` is the clique pair ``(i, j)`` of representative ``a``;
    ``adj_a[a - n]`` its tips; ``adj_n[x]`` the representatives of tip ``x``.
    """

    n: int
    rep: tuple[tuple[int, int], ...]
    adj_a: tuple[tuple[int, ...], ...]
    adj_n: tuple[tuple[int, ...], ...]

    @property
    def rep_count(self) -> int:
        return len(self.rep)

    @property
    def tips(self) -> list[int]:
        return [x for x in range(self.n) if self.adj_n[x]]

    def rep_of(self, a: int) -> tuple[int, int]:
        return self.rep[a - self.n]

    def neighbors(self, node: int) -> tuple[int, ...]:
        return self.adj_n[node] if node < self.n else self.adj_a[node - self.n]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj_a)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, s) for a, row in enumerate(self.adj_a, self.n) for s in row]


def build_aux(g: Graph, st: RoleState) -> AuxBipartite:
    """One representative per maximal clique ``K + anchor`` of a non-special block.

    A block at anchor ``i`` with ``j = min K`` is represented only when
    ``i < j``, i.e. from the minimum vertex of the clique.
    """
    rep: list[tuple[int, int]] = []
    adj_a: list[tuple[int, ...]] = []
    adj_n: list[list[int]] = [[] for _ in range(g.n)]
    for blk in st.blocks:
        j = blk.K[0]
        if j < blk.anchor:
            continue
        a = g.n + len(rep)
        rep.append((blk.anchor, j))
        adj_a.append(blk.S)
        for s in blk.S:
            adj_n[s].append(a)
    return AuxBipartite(g.n, tuple(rep), tuple(adj_a), tuple(tuple(r) for r in adj_n))


def find_six_cycle(b: AuxBipartite, counter=None) -> list[int] | None:
    """A 6-cycle ``[s, a1, s', a2, s'', a3]`` starting at a tip, or ``None``.

    Assumes ``b`` has no 4-cycle. A depth-3 BFS from each tip ``s`` finds
    every 6-cycle through ``s`` as a non-tree edge between levels 2 and 3.
    """
    for s in b.tips:
        parent = {s: s}
        level1 = b.adj_n[s]
        for a in level1:
            parent[a] = s
        level2: list[int] = []
        for a in level1:
            if counter is not None:
                counter.bfs_dequeues += 1
            for x in b.adj_a[a - b.n]:
                if x == s:
                    continue
                if x in parent:
                    raise PipelineError(f"4-cycle through {s} and {x} in auxiliary graph")
                parent[x] = a
                level2.append(x)
        for x in level2:
            if counter is not None:
                counter.bfs_dequeues += 1
                counter.aux_edges_touched += len(b.adj_n[x])
            px = parent[x]
            for a in b.adj_n[x]:
                if a == px:
                    continue
                other = parent.get(a)
                if other is None:
                    parent[a] = x
                    continue
                if other == s or parent[other] == px:
                    raise PipelineError(f"4-cycle through {x} in auxiliary graph")
                return [s, px, x, a, other, parent[other]]
    return None
