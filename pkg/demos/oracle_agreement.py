"""
Checking the recognizer against brute force
===========================================

Two slow oracles answer the same question independently: one looks for
any of the 17 forbidden subgraphs, the other searches for a nonprobe set
and completion directly. On small graphs all three must agree.
"""

import random
from collections import Counter
from itertools import combinations

from probedf import Graph, oracle_completion, oracle_forbidden, recognize, verify

rng = random.Random(11)
verdicts = Counter()
for _ in range(2000):
    n = rng.choice([6, 7, 8])
    g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.4])
    cert = recognize(g)
    assert cert.member == oracle_forbidden(g).member == oracle_completion(g).member
    assert verify(g, cert)
    verdicts["member" if cert.member else cert.name] += 1

# most random graphs at this density are rejected by a small obstruction
for name, count in verdicts.most_common():
    print(f"{name:>20} {count}")

# The completion oracle also shows which nonprobe sets work; the one the
# recognizer returns sits inside all of them.
g = Graph(6, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
print(recognize(g))
print(oracle_completion(g))
