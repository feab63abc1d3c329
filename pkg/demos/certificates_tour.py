"""
Certificates, both ways
=======================

Every answer comes with something checkable: a probe/nonprobe split and
the edges that make it diamond-free, or an ordered vertex list that
induces one of the 17 obstructions.
"""

from probedf import Graph, TEMPLATES, recognize, verify
from probedf.recognizer import dumps

# A diamond: K4 minus the edge 0-3. Its two tips become nonprobes,
# and putting the missing edge back gives K4.
diamond = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
cert = recognize(diamond)
print("diamond ->", dumps(cert))
print("  verifies:", verify(diamond, cert))

# The gem (a path plus a vertex seeing all of it) is already an obstruction.
gem = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
cert = recognize(gem)
print("gem ->", dumps(cert))

# Tampering with a certificate is caught.
from probedf.recognizer import Negative  # noqa: E402

shuffled = Negative(cert.indicator, tuple(reversed(cert.Q)))
print("  reversed order still valid?", verify(gem, shuffled))

# Two diamonds whose tips touch: each tip pair needs its own completion,
# but then the two nonprobe sides would be adjacent. The answer is one of
# the ten two-diamond obstructions, with vertices in template order.
t1 = TEMPLATES[7].graph().relabel([5, 3, 7, 0, 6, 1, 4, 2])
cert = recognize(t1)
print("relabeled T1 ->", cert.name, cert.Q)
print("  verifies:", verify(t1, cert))

# The largest obstruction has nine vertices; it shows up as a 6-cycle in
# the auxiliary graph of diamond cliques and tips.
s3 = TEMPLATES[17].graph()
cert = recognize(s3)
print("S3 ->", cert.name, cert.Q, verify(s3, cert))
