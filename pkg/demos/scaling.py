"""
How the running time grows
==========================

Recognition touches each vertex's neighborhood and the neighborhoods of
those neighbors, so sparse graphs are cheap. Here we time it on random
graphs with about ten edges per vertex and fit the growth against n*m.
"""

from probedf import run_bench

# Random graphs this dense almost always contain a gem. The scan stops at
# the first one, and where that sits varies a lot from seed to seed, so
# five graphs per size go into the fit.
gnp = run_bench([500, 1000, 2000, 4000, 8000], density=10.0, seed=1, repeats=3, instances=5)

# Planted members make the recognizer do all of its work.
planted = run_bench([500, 1000, 2000, 4000, 8000], density=10.0, seed=1, repeats=3, kind="planted-yes")

for rep in (gnp, planted):
    print(rep.kind)
    for r in rep.rows:
        print(f"  n={r.n:>5}  m={r.m:>6}  {r.seconds * 1e3:8.2f} ms  ops/(nm)={r.ops / (r.n * r.m):.5f}  member={r.member}")
    print(f"  slope of log time vs log(n*m): {rep.exponent:.2f}")
