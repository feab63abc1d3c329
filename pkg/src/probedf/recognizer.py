"""Certifying recognition of probe diamond-free graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .aux_bipartite import build_aux, find_six_cycle
from .certificates import check_n_independent, detect_h4
from .graph import Graph, is_diamond_free
from .lucs import LucsViolation, assign_roles, conflict_certificate
from .templates import S3, S4, TEMPLATES, verify_negative


@dataclass(frozen=True)
class Positive:
    """Probe set, independent nonprobe set and completion pairs ``(u, v)``, ``u < v``."""

    P: tuple[int, ...]
    N: tuple[int, ...]
    F: tuple[tuple[int, int], ...]

    member = True

    def to_json(self) -> dict:
        return {
            "result": "yes",
            "probes": list(self.P),
            "nonprobes": list(self.N),
            "completion": [list(e) for e in self.F],
        }


@dataclass(frozen=True)
class Negative:
    """Forbidden subgraph ``indicator`` induced by ``Q`` in template order."""

    indicator: int
    Q: tuple[int, ...]

    member = False

    @property
    def name(self) -> str:
        return TEMPLATES[self.indicator].name

    def to_json(self) -> dict:
        return {
            "result": "no",
            "indicator": self.indicator,
            "name": self.name,
            "vertices": list(self.Q),
        }


Certificate = Positive | Negative


def recognize(g: Graph, counter=None) -> Certificate:
    """Decide whether ``g`` is probe diamond-free, with a certificate either way."""
    if g.n <= 3:
        return Positive(tuple(range(g.n)), (), ())
    st = assign_roles(g, counter)
    if isinstance(st, LucsViolation):
        return Negative(st.indicator, tuple(st.vertices))
    if st.conflict is not None:
        ind, q = conflict_certificate(g, st)
        return Negative(ind, tuple(q))
    bad = check_n_independent(g, st)
    if bad is not None:
        return Negative(bad[0], tuple(bad[1]))
    aux = build_aux(g, st)
    h4 = detect_h4(g, st, aux, counter)
    if h4 is not None:
        return Negative(S4, tuple(h4))
    cycle = find_six_cycle(aux, counter)
    if cycle is not None:
        s, a1, s1, a2, s2, a3 = cycle
        x1, y1 = aux.rep_of(a1)
        x2, y2 = aux.rep_of(a3)
        x3, y3 = aux.rep_of(a2)
        return Negative(S3, (s, s1, s2, x1, y1, x2, y2, x3, y3))
    N = tuple(sorted(st.N))
    P = tuple(v for v in range(g.n) if v not in st.N)
    return Positive(P, N, tuple(sorted(st.F)))


def verify_positive(g: Graph, cert: Positive) -> bool:
    """Check the partition, the completion pairs, and diamond-freeness of ``G + F``."""
    P, N = set(cert.P), set(cert.N)
    if P & N or P | N != set(range(g.n)) or len(P) + len(N) != g.n:
        return False
    if any(g.has_edge(u, v) for u, v in combinations(N, 2)):
        return False
    pairs = set()
    for e in cert.F:
        if len(e) != 2:
            return False
        u, v = sorted(e)
        if u == v or u not in N or v not in N or (u, v) in pairs:
            return False
        pairs.add((u, v))
    return is_diamond_free(g.add_edges(pairs)) is True


def verify(g: Graph, cert: Certificate) -> bool:
    if isinstance(cert, Positive):
        return verify_positive(g, cert)
    return verify_negative(g, cert.indicator, cert.Q)


def certificate_from_json(data: dict) -> Certificate:
    """Inverse of ``to_json``; raises ``ValueError`` on schema mismatch."""
    try:
        result = data["result"]
        if result == "yes":
            return Positive(
                tuple(int(v) for v in data["probes"]),
                tuple(int(v) for v in data["nonprobes"]),
                tuple(tuple(int(v) for v in e) for e in data["completion"]),
            )
        if result == "no":
            ind = int(data["indicator"])
            if ind not in TEMPLATES:
                raise ValueError(f"unknown indicator {ind}")
            return Negative(ind, tuple(int(v) for v in data["vertices"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed certificate: {exc}") from None
    raise ValueError(f"unknown result {data.get('result')!r}")


def dumps(cert: Certificate) -> str:
    return json.dumps(cert.to_json())
