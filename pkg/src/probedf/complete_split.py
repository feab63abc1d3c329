"""Complete split recognition from degrees, and LUCS obstructions on failure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, induced_subgraph


@dataclass(frozen=True)
class CompleteSplitPartition:
    """Clique side ``K`` and maximum independent side ``S``, both ascending."""

    K: tuple[int, ...]
    S: tuple[int, ...]

    @property
    def special(self) -> bool:
        return len(self.S) == 1


def csda(view) -> CompleteSplitPartition | None:
    """Decide complete-splitness from the degree sequence alone.

    ``view`` is anything with aligned ``vertices`` and ``degrees``
    sequences (a :class:`Graph` or a ``ComponentView``). Returns ``None``
    when the graph is not complete split.
    """
    vertices = list(view.vertices)
    degrees = view.degrees
    n = len(vertices)
    if n == 0:
        return CompleteSplitPartition((), ())
    full = n - 1
    n_full = sum(1 for d in degrees if d == full)
    if n_full == n:
        vmin = min(vertices)
        return CompleteSplitPartition(tuple(sorted(v for v in vertices if v != vmin)), (vmin,))
    if all(d == 0 for d in degrees):
        return CompleteSplitPartition((), tuple(sorted(vertices)))
    k = n_full
    if not 1 <= k < full:
        return None
    if any(d != full and d != k for d in degrees):
        return None
    K = tuple(sorted(v for v, d in zip(vertices, degrees) if d == full))
    S = tuple(sorted(v for v, d in zip(vertices, degrees) if d != full))
    return CompleteSplitPartition(K, S)


def stopped_bfs(g: Graph, z: int, x: int, y: int, counter=None) -> tuple[int, list[int]]:
    """BFS from ``z`` halted when ``x`` or ``y`` is first discovered.

    Returns ``(1, [c, a, d, b])`` when the four vertices induce a P4 and
    ``(3, [c, a, b, d])`` when they induce a paw, where ``a`` is the first
    of ``x, y`` discovered, ``b`` the other, ``c`` the BFS parent of ``a``
    and ``d`` the parent of ``c``.
    """
    if not g.has_edge(x, y) or g.has_edge(z, x) or g.has_edge(z, y) or z in (x, y):
        raise ValueError("stopped_bfs needs xy in E and z non-adjacent to both")
    parent = {z: z}
    queue = deque([z])
    a = None
    while queue and a is None:
        u = queue.popleft()
        if counter is not None:
            counter.bfs_dequeues += 1
        for w in g.adj[u]:
            if w in parent:
                continue
            parent[w] = u
            if w == x or w == y:
                a = w
                break
            queue.append(w)
    if a is None:
        raise ValueError("x and y are not reachable from z")
    b = y if a == x else x
    c = parent[a]
    d = parent[c]
    if g.has_edge(c, b):
        return 3, [c, a, b, d]
    return 1, [c, a, d, b]


def non_complete_split(h: Graph, x: int) -> tuple[int, list[int]]:
    """Five vertices of ``h`` inducing gem (1), W4 (2) or paw plus apex (3).

    ``h`` must be connected and not complete split, with ``x`` universal
    and ``h - x`` connected. The sequence starts with ``x``.
    """
    n = h.n
    if h.degree[x] != n - 1:
        raise ValueError("x must be universal")
    in_y = [h.degree[v] < n - 1 for v in range(n)]
    ab = next(((a, b) for a, b in h.edges() if in_y[a] and in_y[b]), None)
    if ab is None:
        raise ValueError("graph is complete split")
    a, b = ab
    a2 = min(v for v in range(n) if in_y[v] and v != a and not h.has_edge(a, v))
    if not h.has_edge(a2, b):
        ind, body = _bfs_without(h, x, a2, a, b)
    else:
        b2 = min(v for v in range(n) if in_y[v] and v != b and not h.has_edge(b, v))
        if not h.has_edge(b2, a):
            ind, body = _bfs_without(h, x, b2, a, b)
        else:
            body = [a, b, b2, a2]
            ind = 2 if h.has_edge(a2, b2) else 1
    return ind, [x, *body]


def _bfs_without(h: Graph, x: int, z: int, a: int, b: int) -> tuple[int, list[int]]:
    rest, back = induced_subgraph(h, [v for v in range(h.n) if v != x])
    local = {v: i for i, v in enumerate(back)}
    ind, seq = stopped_bfs(rest, local[z], local[a], local[b])
    return ind, [back[i] for i in seq]


def lucs_obstruction(g: Graph, anchor: int, component) -> tuple[int, list[int]]:
    """Run :func:`non_complete_split` on ``G[C + anchor]`` in global ids."""
    h, back = induced_subgraph(g, [anchor, *component])
    local = {v: i for i, v in enumerate(back)}
    ind, seq = non_complete_split(h, local[anchor])
    return ind, [back[i] for i in seq]
