"""The 17 ordered forbidden-subgraph templates and order-sensitive verification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, induced_ordered


@dataclass(frozen=True)
class Template:
    indicator: int
    name: str
    order: int
    edges: frozenset[tuple[int, int]]

    def graph(self) -> Graph:
        """The template itself on vertices ``0..order-1`` (position ``i`` is vertex ``i-1``)."""
        return Graph(self.order, [(i - 1, j - 1) for i, j in sorted(self.edges)])


def _pairs(spec: str) -> frozenset[tuple[int, int]]:
    return frozenset(tuple(sorted((int(p[0]), int(p[1])))) for p in spec.split())


_TABLE = [
    (1, "gem", 5, "12 13 14 15 23 24 35"),
    (2, "W4", 5, "12 13 14 15 23 24 35 45"),
    (3, "P3+2K1-complement", 5, "12 13 14 15 23 24 25 34"),
    (4, "S1", 7, "12 13 14 15 16 23 27 37 45 46"),
    (5, "S4", 5, "12 13 15 23 24 34 45"),
    (6, "S2", 7, "12 13 14 15 23 26 36 45 47 57 67"),
    (7, "T1", 8, "12 13 17 23 27 34 45 46 56 58 68"),
    (8, "T2", 8, "12 13 14 17 25 26 28 34 37 45 56 68"),
    (9, "T3", 8, "12 13 14 23 24 35 46 57 58 67 68 78"),
    (10, "T4", 8, "12 13 14 18 23 28 35 46 47 56 57 67"),
    (11, "T5", 8, "12 13 15 17 24 25 27 34 36 38 46 48 56"),
    (12, "T6", 8, "12 13 14 18 24 25 28 35 36 37 46 57 67"),
    (13, "T7", 8, "12 13 14 15 26 27 28 34 35 46 57 68 78"),
    (14, "T8", 8, "13 14 15 16 23 24 27 28 35 47 56 68 78"),
    (15, "T9", 8, "12 13 15 16 24 25 26 34 37 38 47 48 57 68"),
    (16, "T10", 8, "12 13 15 16 25 26 27 34 37 38 45 47 48 68"),
    (17, "S3", 9, "14 15 16 17 24 25 28 29 36 37 38 39 45 67 89"),
]

TEMPLATES: dict[int, Template] = {
    ind: Template(ind, name, k, _pairs(edges)) for ind, name, k, edges in _TABLE
}

GEM, W4, PAW_APEX, S1, S4, S2 = 1, 2, 3, 4, 5, 6
S3 = 17


def t_indicator(i: int) -> int:
    """Indicator of the two-diamond template ``T_i``."""
    return i + 6


def template(ind: int) -> Template:
    try:
        return TEMPLATES[ind]
    except KeyError:
        raise ValueError(f"indicator must be in 1..17, got {ind!r}") from None


def verify_negative(g: Graph, ind: int, seq: Sequence[int]) -> bool:
    """Check that ``seq`` induces template ``ind`` position by position."""
    tpl = TEMPLATES.get(ind)
    if tpl is None or len(seq) != tpl.order:
        return False
    try:
        return induced_ordered(g, list(seq)) == tpl.edges
    except (ValueError, TypeError):
        return False
