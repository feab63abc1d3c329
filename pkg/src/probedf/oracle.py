"""Brute-force ground truth for desk-scale graphs.

Nothing here shares code with the recognizer beyond the :class:`Graph`
container and the template edge table; graphs are re-encoded as adjacency
bitmasks and every question is answered by enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .graph import Graph
from .templates import TEMPLATES


@dataclass(frozen=True)
class OracleVerdict:
    member: bool
    basis: str
    obstruction: tuple[int, tuple[int, ...]] | None = None
    partition: tuple[tuple[int, ...], tuple[tuple[int, int], ...]] | None = None


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _edge(masks: list[int], u: int, v: int) -> bool:
    return bool(masks[u] >> v & 1)


# ------------------------------------------------------------------ diamonds


def _find_diamond(masks: list[int], n: int):
    """First 4-subset with exactly five edges, as ``(tip, x, y, tip)``."""
    for quad in combinations(range(n), 4):
        missing = [(a, b) for a, b in combinations(quad, 2) if not _edge(masks, a, b)]
        if len(missing) == 1:
            a, b = missing[0]
            x, y = (v for v in quad if v != a and v != b)
            return a, x, y, b
    return None


def enumerate_diamonds(g: Graph) -> list[tuple[int, int, int, int]]:
    """Every induced diamond as ``(tip, non-tip, non-tip, tip)``, ascending within roles."""
    masks = _masks(g)
    out = []
    for quad in combinations(range(g.n), 4):
        missing = [(a, b) for a, b in combinations(quad, 2) if not _edge(masks, a, b)]
        if len(missing) == 1:
            a, b = missing[0]
            x, y = (v for v in quad if v != a and v != b)
            out.append((a, x, y, b))
    return out


def diamond_tips(g: Graph) -> set[int]:
    return {v for d in enumerate_diamonds(g) for v in (d[0], d[3])}


def cotip_pairs(g: Graph) -> set[tuple[int, int]]:
    return {(d[0], d[3]) for d in enumerate_diamonds(g)}


def diamond_roles(g: Graph) -> tuple[set[int], set[int]]:
    """Vertices that are tips of some diamond, and non-tips of some diamond."""
    tips, nontips = set(), set()
    for a, x, y, b in enumerate_diamonds(g):
        tips.update((a, b))
        nontips.update((x, y))
    return tips, nontips


# ------------------------------------------------- unordered template search


def _invariant(k: int, degs: list[int]) -> tuple:
    return k, sum(degs), tuple(sorted(degs))


_BY_INVARIANT: dict[tuple, list[int]] = {}
for _ind, _tpl in TEMPLATES.items():
    _degs = [sum(1 for e in _tpl.edges if i in e) for i in range(1, _tpl.order + 1)]
    _BY_INVARIANT.setdefault(_invariant(_tpl.order, _degs), []).append(_ind)


def embed(masks: list[int], verts: tuple[int, ...], ind: int) -> list[int] | None:
    """Order ``verts`` so they induce template ``ind`` position-wise, or ``None``."""
    tpl = TEMPLATES[ind]
    k = tpl.order
    if len(verts) != k:
        return None
    tadj = [[False] * k for _ in range(k)]
    for i, j in tpl.edges:
        tadj[i - 1][j - 1] = tadj[j - 1][i - 1] = True
    tdeg = [sum(row) for row in tadj]
    sub = 0
    for v in verts:
        sub |= 1 << v
    gdeg = {v: (masks[v] & sub).bit_count() for v in verts}
    chosen: list[int] = []
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == k:
            return True
        for v in verts:
            if v in used or gdeg[v] != tdeg[pos]:
                continue
            if all(_edge(masks, v, chosen[i]) == tadj[pos][i] for i in range(pos)):
                chosen.append(v)
                used.add(v)
                if extend(pos + 1):
                    return True
                chosen.pop()
                used.discard(v)
        return False

    return chosen if extend(0) else None


def oracle_forbidden(g: Graph) -> OracleVerdict:
    """Search all 5- to 9-vertex subsets for an induced copy of any template."""
    masks = _masks(g)
    for k in range(5, min(9, g.n) + 1):
        for verts in combinations(range(g.n), k):
            sub = 0
            for v in verts:
                sub |= 1 << v
            degs = [(masks[v] & sub).bit_count() for v in verts]
            for ind in _BY_INVARIANT.get(_invariant(k, degs), ()):
                if embed(masks, verts, ind) is not None:
                    return OracleVerdict(False, "forbidden", obstruction=(ind, verts))
    return OracleVerdict(True, "forbidden")


# ----------------------------------------------------- completion search


def independent_sets(g: Graph, maximal_only: bool = False) -> list[tuple[int, ...]]:
    masks = _masks(g)
    n = g.n
    out = []

    def grow(start: int, chosen: list[int], blocked: int) -> None:
        # blocked covers the chosen vertices and their neighbors, so a set
        # with nothing left unblocked is maximal
        if not maximal_only or blocked == full:
            out.append(tuple(chosen))
        for v in range(start, n):
            if blocked >> v & 1:
                continue
            chosen.append(v)
            grow(v + 1, chosen, blocked | masks[v] | 1 << v)
            chosen.pop()

    full = (1 << n) - 1
    grow(0, [], 0)
    return out


def forced_completion(g: Graph, nonprobes) -> tuple[tuple[int, int], ...] | None:
    """Least completion for a fixed nonprobe set, or ``None`` if none exists.

    Any diamond in ``G + F`` can only be destroyed by adding its own missing
    edge, so each one found forces its tip pair into ``F``.
    """
    masks = _masks(g)
    inside = set(nonprobes)
    added = []
    while True:
        d = _find_diamond(masks, g.n)
        if d is None:
            return tuple(sorted(added))
        a, _, _, b = d
        if a not in inside or b not in inside:
            return None
        masks[a] |= 1 << b
        masks[b] |= 1 << a
        added.append((min(a, b), max(a, b)))


def _exhaustive_completion(g: Graph, nonprobes) -> tuple[tuple[int, int], ...] | None:
    masks = _masks(g)
    pairs = [(u, v) for u, v in combinations(sorted(nonprobes), 2) if not _edge(masks, u, v)]
    best = None
    for picks in product((False, True), repeat=len(pairs)):
        trial = list(masks)
        chosen = []
        for (u, v), take in zip(pairs, picks):
            if take:
                trial[u] |= 1 << v
                trial[v] |= 1 << u
                chosen.append((u, v))
        if _find_diamond(trial, g.n) is None and (best is None or len(chosen) < len(best)):
            best = tuple(chosen)
    return best


def oracle_completion(g: Graph, max_n: int = 10, exhaustive: bool = False) -> OracleVerdict:
    """Search nonprobe sets and completions for a diamond-free supergraph.

    Membership is monotone in the nonprobe set, so only maximal independent
    sets are tried. ``exhaustive`` replaces the forced-pair closure by
    enumeration of every subset of nonprobe pairs.
    """
    if g.n > max_n:
        raise ValueError(f"graph too large for the completion oracle ({g.n} > {max_n})")
    solve = _exhaustive_completion if exhaustive else forced_completion
    for nonprobes in independent_sets(g, maximal_only=True):
        F = solve(g, nonprobes)
        if F is not None:
            return OracleVerdict(True, "completion", partition=(nonprobes, F))
    return OracleVerdict(False, "completion")


def all_completions(g: Graph) -> list[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]]:
    """Every valid nonprobe set with its least completion."""
    out = []
    for nonprobes in independent_sets(g):
        F = forced_completion(g, nonprobes)
        if F is not None:
            out.append((nonprobes, F))
    return out
