"""
Chains of curves and the disc boundary
======================================

Genus 2 with one boundary circle, curves ``alpha, beta, gamma, delta`` in a
chain and an arc ``theta`` across ``beta``.
"""

from handle_irr import fixtures
from handle_irr.doubling import DISC, build_QR
from handle_irr.penner import check_penner_pair, validate_dual_arc
from handle_irr.surfmap import crossing_count
from handle_irr.twistword import certify_irreducible

C, D = ["beta", "delta"], ["alpha", "gamma"]
S = fixtures.octagon()
print("genus", S.genus, "boundary", S.boundary, "single face of length", len(S.faces[0]))
print("Penner pair:", check_penner_pair(S, C, D).passed)
print(validate_dual_arc(S, "theta", C, D))

# the disc boundary runs twice along theta on S x {0} and around
# theta + beta on S x {1}
DM, qr, _ = build_QR(S, C, D, "theta")
for c in sorted(DM.map.closed_curves()):
    if c != DISC:
        print(f"  {DISC} meets {c:8s} {crossing_count(DM.map, DISC, c)} times")

good = certify_irreducible(S, C, D, "theta", fixtures.OCT_WORD)
print(good.verdict)

# drop the disc twist and the certificate stops at the coverage check
bad = certify_irreducible(S, C, D, "theta", "T-A(beta) T-A(delta) T+A(alpha) T+A(gamma)")
print(bad.steps[-1].line())
print(bad.verdict, bad.reason)
