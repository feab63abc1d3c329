"""Undirected simple graphs, text I/O and neighborhood decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised when a graph file is malformed; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is a strictly ascending tuple of neighbors; ``nbrs[v]`` is the
    same set as a frozenset for constant-time edge tests.
    """

    __slots__ = ("n", "m", "adj", "nbrs", "degree")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        sets: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            _check_edge(n, u, v, sets)
            sets[u].add(v)
            sets[v].add(u)
            m += 1
        self.n = n
        self.m = m
        self.adj = tuple(tuple(sorted(s)) for s in sets)
        self.nbrs = tuple(frozenset(s) for s in sets)
        self.degree = tuple(len(s) for s in sets)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.degree

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbrs[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if v > u]

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """Return a new graph with ``extra`` edges added (must be non-edges)."""
        return Graph(self.n, [*self.edges(), *extra])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_edge(n: int, u: int, v: int, sets: list[set[int]]) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(f"vertex out of range in edge ({u}, {v})")
    if u == v:
        raise GraphFormatError(f"self-loop at vertex {u}")
    if v in sets[u]:
        raise GraphFormatError(f"duplicate edge ({u}, {v})")


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices``; returns it with the local-to-global map."""
    order = sorted(vertices)
    local = {v: i for i, v in enumerate(order)}
    edges = [
        (i, local[w])
        for i, v in enumerate(order)
        for w in g.adj[v]
        if w in local and local[w] > i
    ]
    return Graph(len(order), edges), order


# ---------------------------------------------------------------- text formats


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    """Parse an edgelist (``n m`` header, 0-indexed) or DIMACS graph.

    Blank lines and ``#`` comments are ignored in edgelists; DIMACS uses
    ``c`` comment lines, ``p edge n m`` and 1-indexed ``e u v`` lines.
    """
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _build(n: int, m: int, edges: list[tuple[int, int, int]], header_line: int) -> Graph:
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}", header_line)
    sets: list[set[int]] = [set() for _ in range(n)]
    for u, v, lineno in edges:
        try:
            _check_edge(n, u, v, sets)
        except GraphFormatError as exc:
            raise GraphFormatError(str(exc), lineno) from None
        sets[u].add(v)
        sets[v].add(u)
    return Graph(n, ((u, v) for u, v, _ in edges))


def _parse_edgelist(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two integers, got {raw.strip()!r}", lineno)
        a, b = _ints(tokens, lineno)
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (a, b, lineno)
        else:
            edges.append((a, b, lineno))
    if header is None:
        raise GraphFormatError("missing 'n m' header", 1)
    n, m, hline = header
    return _build(n, m, edges, hline)


def _parse_dimacs(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if header is not None:
                raise GraphFormatError("second 'p' line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphFormatError(f"malformed problem line {raw.strip()!r}", lineno)
            n, m = _ints(tokens[2:], lineno)
            header = (n, m, lineno)
        elif tokens[0] == "e":
            if header is None:
                raise GraphFormatError("edge before 'p' line", lineno)
            if len(tokens) != 3:
                raise GraphFormatError(f"malformed edge line {raw.strip()!r}", lineno)
            u, v = _ints(tokens[1:], lineno)
            edges.append((u - 1, v - 1, lineno))
        else:
            raise GraphFormatError(f"unknown line type {tokens[0]!r}", lineno)
    if header is None:
        raise GraphFormatError("missing 'p edge n m' line", 1)
    n, m, hline = header
    return _build(n, m, edges, hline)


def format_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    elif fmt == "dimacs":
        lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    else:
        raise ValueError(f"unknown graph format {fmt!r}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------ neighborhood components


@dataclass(frozen=True)
class ComponentView:
    """One connected component of ``G[N(anchor)]``.

    ``degrees[i]`` is the degree of ``vertices[i]`` inside the component.
    """

    anchor: int
    vertices: tuple[int, ...]
    degrees: tuple[int, ...]


def neighborhood_components(g: Graph, v: int, counter=None) -> list[ComponentView]:
    """Connected components of ``G[N(v)]`` ordered by minimum vertex."""
    nv = g.nbrs[v]
    inner: dict[int, frozenset[int]] = {}
    seen: set[int] = set()
    out = []
    for start in g.adj[v]:
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        i = 0
        while i < len(comp):
            u = comp[i]
            i += 1
            row = g.nbrs[u] & nv
            inner[u] = row
            for w in row:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
        comp.sort()
        out.append(ComponentView(v, tuple(comp), tuple(len(inner[u]) for u in comp)))
    if counter is not None:
        counter.neighborhood_scans += sum(g.degree[u] for u in g.adj[v])
    return out


def induced_ordered(g: Graph, seq: Sequence[int]) -> set[tuple[int, int]]:
    """Position pairs ``(i, j)``, 1-based with ``i < j``, whose vertices are adjacent."""
    if len(set(seq)) != len(seq):
        raise ValueError("sequence has repeated vertices")
    for v in seq:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    return {
        (i + 1, j + 1)
        for i in range(len(seq))
        for j in range(i + 1, len(seq))
        if g.has_edge(seq[i], seq[j])
    }


def is_diamond_free(g: Graph) -> bool | list[int]:
    """``True`` if ``g`` has no induced diamond, else a witness ``[tip, x, y, tip]``.

    Uses the fact that ``g`` is diamond-free iff the common neighborhood of
    every edge is a clique.
    """
    nbrs = g.nbrs
    for u, v in g.edges():
        common = nbrs[u] & nbrs[v]
        if len(common) < 2:
            continue
        for a in sorted(common):
            missing = common - nbrs[a] - {a}
            if missing:
                return [a, u, v, min(missing)]
    return True


@dataclass
class OpCounts:
    """Instrumented unit-operation totals collected by the recognizer."""

    neighborhood_scans: int = 0
    aux_edges_touched: int = 0
    bfs_dequeues: int = 0

    @property
    def total(self) -> int:
        return self.neighborhood_scans + self.aux_edges_touched + self.bfs_dequeues
