"""
Where reducing surfaces can live
================================

A closed reducing surface ``F`` in a genus-``g`` handlebody has
``6 - 2g <= chi(F) <= 0``.  The window is empty in genus 2.
"""

from handle_irr import fixtures
from handle_irr.bounds import genus2_verdict, reducing_surface_window
from handle_irr.twistword import certify_genus2

for g in range(2, 7):
    for line in reducing_surface_window(g).table():
        print(line)
    print()

print(genus2_verdict(2).statement)

# genus 2: twists along two disc-bounding filling curves
H2 = fixtures.FIXTURES["FIX-H2"]
print(certify_genus2(H2.map, H2.C, H2.D, H2.word).text())

# genus 3: the same recipe is rejected, tori are still allowed
H3 = fixtures.FIXTURES["FIX-H3"]
print(certify_genus2(H3.map, H3.C, H3.D, "T+C(C0) T-C(C1)").text())
print(H3.description)
