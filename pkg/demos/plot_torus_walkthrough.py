"""
A twist word on the genus-2 handlebody
=======================================

The handlebody is ``S x I`` with ``S`` a once-punctured torus.  We check the
curve pair on ``S``, build the boundary surface, and certify a word.
"""

from handle_irr import fixtures
from handle_irr.doubling import build_QR, dumps_doubled
from handle_irr.penner import check_penner_pair, find_dual_arcs
from handle_irr.twistword import boundary_restriction, certify_irreducible

# the once-punctured torus: one crossing, one face with the puncture in it
S = fixtures.torus()
print("sigma", S.sigma, "faces", S.faces)
for line in check_penner_pair(S, ["a0"], ["a1"]).lines():
    print(" ", line)

# both edges border the punctured region twice, so each carries a dual arc
for p in find_dual_arcs(S, ["a0"], ["a1"]):
    print("dual arc through", p.curve, p.line())

# take the arc across a1; the curve it crosses plays the role of C
S = fixtures.torus_with_arc()
DM, qr, report = build_QR(S, ["a0"], ["a1"], "theta")
print("boundary genus", DM.map.genus, "chi", DM.map.surface_euler_characteristic)
print("Q =", sorted(qr.Q))
print("R =", sorted(qr.R))

# the annulus and disc twists restrict to opposite twists on the two copies
word = fixtures.TORUS_WORD
print("on the boundary:", boundary_restriction(word, DM))

cert = certify_irreducible(S, ["a0"], ["a1"], "theta", word)
print(cert.text())

# the doubled map, as written by `handle-irr double`
print(dumps_doubled(DM, qr)[:400])
