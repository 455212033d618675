"""The fixture corpus.

Each fixture is built from crossing sequences with :func:`build_map`, so the
encodings below are short and easy to check by hand.

``FIX-TORUS``
    Once-punctured torus with two curves ``a0`` and ``a1`` meeting once.
    The dual arc ``theta`` crosses ``a1``.
``FIX-OCT``
    Genus-2 surface with one boundary circle and the chain
    ``alpha - beta - gamma - delta``; the arc ``theta`` crosses ``beta`` once.
    As systems, ``C = {beta, delta}`` and ``D = {alpha, gamma}``.
``FIX-H2``
    Closed genus-2 surface filled by two curves ``C0`` and ``C1`` meeting in
    four points.
``FIX-H3``
    Closed genus-3 surface filled by two curves meeting in six points.
"""
from dataclasses import dataclass

from .surfmap import ARC, CLOSED, CombMap, Region, _Work, build_map, delete_components, insert_arc


@dataclass(frozen=True)
class Fixture:
    name: str
    map: CombMap
    C: tuple
    D: tuple
    theta: str = None
    word: str = None
    description: str = ""


def torus():
    """One vertex, two edges, ``sigma = (0 2 1 3)`` and one punctured region."""
    return build_map([("a0", CLOSED, ["X"]), ("a1", CLOSED, ["X"])], {"X": 1}, punctures=[0])


def torus_with_arc(edge=1, name="theta"):
    """``FIX-TORUS`` plus an arc crossing edge ``edge`` (``a1`` by default)."""
    return insert_arc(torus(), edge, name)


def octagon():
    curves = [
        ("alpha", CLOSED, ["X1"]),
        ("beta", CLOSED, ["X1", "Y", "X2"]),
        ("gamma", CLOSED, ["X2", "X3"]),
        ("delta", CLOSED, ["X3"]),
        ("theta", ARC, ["Y"]),
    ]
    # edges: alpha 1, beta 3, gamma 2, delta 1, then theta; its first end dart
    end = 2 * 7
    return build_map(curves, punctures=[end])


def genus2_closed():
    return build_map([("C0", CLOSED, [0, 1, 2, 3]), ("C1", CLOSED, [0, 1, 3, 2])])


def genus3_closed():
    return build_map([("C0", CLOSED, [0, 1, 2, 3, 4, 5]), ("C1", CLOSED, [0, 1, 2, 4, 5, 3])])


GENUS3_NOTE = (
    "C0 and C1 fill the closed genus-3 surface, so T_C0 and T_C1 of opposite signs "
    "give a pseudo-Anosov boundary map.  A handlebody automorphism with this "
    "boundary can still be reducible: the window for a reducing surface allows "
    "an incompressible torus (chi = 0) in the exterior, which no boundary check "
    "rules out.")


def bigon_torus():
    """Once-punctured torus where ``a0`` and ``a1`` meet three times and
    cobound two bigons; the puncture sits in the octagonal face."""
    proto = build_map([("a0", CLOSED, ["x", "y", "z"]), ("a1", CLOSED, ["x", "y", "z"])],
                      {"x": 1, "y": 1, "z": -1})
    big = max(proto.faces, key=len)
    return build_map([("a0", CLOSED, ["x", "y", "z"]), ("a1", CLOSED, ["x", "y", "z"])],
                     {"x": 1, "y": 1, "z": -1}, punctures=[big[0]])


def parallel_torus(keep_a1=False):
    """Once-punctured torus with disjoint isotopic loops ``a0`` and ``a0p``.

    With ``keep_a1`` the curve ``a1`` crossing both is kept; otherwise the
    map is the two loops alone."""
    M = build_map([("a0", CLOSED, ["u"]), ("a0p", CLOSED, ["w"]), ("a1", CLOSED, ["u", "w"])],
                  punctures=[0])
    return M if keep_a1 else delete_components(M, ["a0", "a0p"])


def with_free_loop(M, region, name, puncture=False):
    """Add a loop meeting nothing inside ``region``; it bounds a disc, or a
    punctured disc when ``puncture`` moves one puncture of ``region`` inside."""
    w = _Work(M)
    x, y = w.new_dart(), w.new_dart()
    w.sigma.update({x: y, y: x})
    w.sinv.update({x: y, y: x})
    w.alpha.update({x: y, y: x})
    w.label.update({x: name, y: name})
    w.kinds[name] = CLOSED
    w.region_of[x] = region
    w.regions.append([0, 0, []])
    w.region_of[y] = len(w.regions) - 1
    if puncture:
        if not w.regions[region][1]:
            raise ValueError(f"region {region} has no puncture to enclose")
        w.regions[region][1] -= 1
        if w.regions[region][2]:
            w.regions[region][2].pop()
        w.regions[-1] = [0, 1, [y]]
    w.recompute_genus(region)
    return w.to_map()


def twice_punctured_annulus_arc():
    """A loop ``c`` with an arc ``t`` crossing it once, on an annulus: the two
    ends of ``t`` reach different boundary circles."""
    return build_map([("c", CLOSED, ["X"]), ("t", ARC, ["X"])], punctures=[2, 5])


TORUS_WORD = "T+Δ T+A(a1) T-A(a0)"
OCT_WORD = "T-Δ T-A(beta) T-A(delta) T+A(alpha) T+A(gamma)"
H2_WORD = "T+C(C0) T-C(C1)"

# Action on pi_1 of the genus-2 handlebody S x I, S the once-punctured torus,
# free on a (dual to a0) and b (dual to a1).  Uppercase letters are inverses.
PI1_TABLES = {
    "T0+": "a->a; b->ba",
    "T0-": "a->a; b->bA",
    "T1+": "a->aB; b->b",
    "T1-": "a->ab; b->b",
    "Tdisc": "a->a; b->b",
    "phi": "a->aB; b->bbA",
}


def _corpus():
    return {
        "FIX-TORUS": Fixture("FIX-TORUS", torus(), ("a0",), ("a1",), None, TORUS_WORD,
                             "once-punctured torus, curves a0 and a1 meeting once"),
        "FIX-TORUS-ARC": Fixture("FIX-TORUS-ARC", torus_with_arc(), ("a0",), ("a1",), "theta",
                                 TORUS_WORD, "FIX-TORUS with a dual arc crossing a1"),
        "FIX-OCT": Fixture("FIX-OCT", octagon(), ("beta", "delta"), ("alpha", "gamma"), "theta",
                           OCT_WORD, "genus 2, one boundary circle, chain of four curves, arc theta"),
        "FIX-H2": Fixture("FIX-H2", genus2_closed(), ("C0",), ("C1",), None, H2_WORD,
                          "closed genus 2, two filling curves meeting four times"),
        "FIX-H3": Fixture("FIX-H3", genus3_closed(), ("C0",), ("C1",), None, None,
                          "closed genus 3, two filling curves. " + GENUS3_NOTE),
    }


FIXTURES = _corpus()


def get(name):
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
