"""Seeded random instances: plain G(n, p) and planted members / non-members."""

from __future__ import annotations

import math
import random
from itertools import combinations

from .graph import Graph
from .templates import TEMPLATES

KINDS = ("gnp", "planted-yes", "planted-no")


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi graph drawn with geometric skips, so cost is O(n + m)."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError(f"need n >= 0 and 0 <= p <= 1, got n={n}, p={p}")
    rng = random.Random(seed)
    if p == 0.0 or n < 2:
        return Graph(n, [])
    if p == 1.0:
        return Graph(n, combinations(range(n), 2))
    log_q = math.log(1.0 - p)
    edges = []
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log(1.0 - rng.random()) / log_q)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            edges.append((w, v))
    return Graph(n, edges)


def _diamond_free_after(adj: list[set[int]], clique: list[int]) -> bool:
    # a new diamond must have an edge with an endpoint in the clique
    # as its middle edge, and middle edges see a non-clique common neighborhood
    for a in clique:
        for b in adj[a]:
            common = adj[a] & adj[b]
            for x in common:
                if len(common - adj[x]) > 1:
                    return False
    return True


def random_diamond_free(n: int, rng: random.Random, density: float = 1.0,
                        max_clique: int = 7, target_edges: int | None = None) -> list[set[int]]:
    """Pack random small cliques, keeping each one only if no diamond appears.

    Tries ``density * n`` cliques, or with ``target_edges`` keeps going
    until that many edges exist (giving up after ``50 * n`` tries).
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    if n < 2:
        return adj
    tries = int(density * n) if target_edges is None else 50 * n
    m = 0
    for _ in range(tries):
        if target_edges is not None and m >= target_edges:
            break
        k = rng.randint(2, min(max_clique, n))
        clique = rng.sample(range(n), k)
        new = [(u, v) for u, v in combinations(clique, 2) if v not in adj[u]]
        if not new:
            continue
        for u, v in new:
            adj[u].add(v)
            adj[v].add(u)
        if _diamond_free_after(adj, clique):
            m += len(new)
        else:
            for u, v in new:
                adj[u].discard(v)
                adj[v].discard(u)
    return adj


def _shuffled(n: int, edges, rng: random.Random) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


def planted_yes(n: int, seed: int, nonprobe_frac: float = 0.35,
                avg_degree: float | None = None) -> Graph:
    """A guaranteed member.

    Starts from a diamond-free graph, picks a random vertex set as the
    nonprobes and deletes every edge inside it; re-adding those edges
    is a valid completion. ``avg_degree`` sets the edge target of the
    diamond-free starting graph (before deletion).
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    rng = random.Random(seed)
    target = None if avg_degree is None else int(avg_degree * n / 2)
    return _shuffled(n, _planted_edges(n, rng, nonprobe_frac, target), rng)


def _planted_edges(n: int, rng: random.Random, nonprobe_frac: float,
                   target_edges: int | None = None) -> list[tuple[int, int]]:
    adj = random_diamond_free(n, rng, target_edges=target_edges)
    nonprobe = {v for v in range(n) if rng.random() < nonprobe_frac}
    return [
        (u, v) for u in range(n) for v in adj[u]
        if u < v and not (u in nonprobe and v in nonprobe)
    ]


def planted_no(n: int, seed: int, indicator: int | None = None, cross_p: float = 0.05) -> Graph:
    """A guaranteed non-member: a planted member plus one induced template copy.

    Cross edges between the copy and the rest are random; they cannot
    change the subgraph induced on the copy.
    """
    rng = random.Random(seed)
    if indicator is None:
        indicator = rng.choice([i for i in TEMPLATES if TEMPLATES[i].order <= n])
    if indicator not in TEMPLATES:
        raise ValueError(f"indicator must be in 1..{len(TEMPLATES)}, got {indicator}")
    tpl = TEMPLATES[indicator]
    k = tpl.order
    if n < k:
        raise ValueError(f"n={n} too small for template {tpl.name} on {k} vertices")
    host = n - k
    edges = _planted_edges(host, rng, 0.35)
    edges += [(host + i - 1, host + j - 1) for i, j in tpl.edges]
    for c in range(host, n):
        edges += [(h, c) for h in range(host) if rng.random() < cross_p]
    return _shuffled(n, edges, rng)


def generate(kind: str, n: int, seed: int, p: float = 0.5, indicator: int | None = None) -> Graph:
    if kind == "gnp":
        return gnp(n, p, seed)
    if kind == "planted-yes":
        return planted_yes(n, seed)
    if kind == "planted-no":
        return planted_no(n, seed, indicator)
    raise ValueError(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
