"""Penner pairs and dual arcs."""
from dataclasses import dataclass, field
from itertools import combinations

from .surfmap import (
    ARC, CLOSED, ESSENTIAL, MapError, UnknownCurve, arc_essential, are_parallel,
    bigon_faces, crossing_count, delete_components, insert_arc, is_essential,
)

SYSTEMS = "systems"
EFFICIENT = "efficient"
NO_PARALLEL = "no-parallel"
FILLING = "filling"
CONDITIONS = (SYSTEMS, EFFICIENT, NO_PARALLEL, FILLING)


class PennerHypothesisError(MapError):
    pass


class MalformedPartition(MapError):
    pass


class DualArcRejected(MapError):
    def __init__(self, reason, message):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class Verdict:
    passed: bool
    details: tuple = ()


@dataclass(frozen=True)
class PennerPair:
    map: object
    C: frozenset
    D: frozenset
    report: dict = field(compare=False)

    @property
    def passed(self):
        return all(v.passed for v in self.report.values())

    def failed(self):
        return [k for k in CONDITIONS if not self.report[k].passed]

    def lines(self):
        out = []
        for k in CONDITIONS:
            v = self.report[k]
            out.append(f"{k}: {'pass' if v.passed else 'fail'}")
            out.extend(f"  {d}" for d in v.details)
        return out


@dataclass(frozen=True)
class DualArc:
    arc: str
    crossed_curve: str
    crossed_system: str  # "C" or "D"


def _check_partition(M, C, D):
    C, D = frozenset(C), frozenset(D)
    for c in C | D:
        if c not in M.kinds:
            raise UnknownCurve(f"unknown curve {c!r}")
    if C & D:
        raise MalformedPartition(f"curves {sorted(C & D)} are in both systems")
    arcs = sorted(c for c in C | D if M.kinds[c] == ARC)
    if arcs:
        raise MalformedPartition(f"arcs {arcs} cannot belong to a curve system")
    missing = sorted(set(M.closed_curves()) - (C | D))
    if missing:
        raise MalformedPartition(f"closed curves {missing} are in neither system")
    return C, D


def check_penner_pair(M, C, D):
    """Check the four Penner-pair conditions for systems ``C`` and ``D``.

    The conditions are evaluated on the map with all arcs removed; parallel
    pairs are looked for among all curves, inside a system as well as across.
    """
    C, D = _check_partition(M, C, D)
    if M.surface_euler_characteristic >= 0:
        raise PennerHypothesisError(
            f"surface has Euler characteristic {M.surface_euler_characteristic} >= 0")
    N = delete_components(M, C | D)
    report = {}

    bad = []
    for name, system in (("C", C), ("D", D)):
        if not system:
            bad.append(f"system {name} is empty")
        for x, y in combinations(sorted(system), 2):
            k = crossing_count(N, x, y)
            if k:
                bad.append(f"{x} and {y} in {name} cross {k} times")
        for c in sorted(system):
            verdict = is_essential(N, c)
            if verdict != ESSENTIAL:
                bad.append(f"{c} is not essential ({verdict})")
    report[SYSTEMS] = Verdict(not bad, tuple(bad))

    bad = []
    for face in bigon_faces(N):
        x, y = sorted({N.label(d) for d in face})
        if (x in C) != (y in C):
            bad.append(f"bigon between {x} and {y} at darts {face}")
    report[EFFICIENT] = Verdict(not bad, tuple(bad))

    bad = []
    for x, y in combinations(sorted(C | D), 2):
        if are_parallel(N, x, y):
            bad.append(f"{x} and {y} are parallel")
    report[NO_PARALLEL] = Verdict(not bad, tuple(bad))

    bad = []
    for r, reg in enumerate(N.regions):
        if reg.genus or reg.punctures > 1 or len(reg.traces) != 1:
            bad.append(f"region {r} has genus {reg.genus}, {len(reg.traces)} boundary traces "
                       f"and {reg.punctures} punctures")
    report[FILLING] = Verdict(not bad, tuple(bad))
    return PennerPair(M, C, D, report)


def validate_dual_arc(M, theta, C, D):
    """Check that ``theta`` is an essential arc meeting the curves of ``C``
    and ``D`` exactly once, away from their crossings."""
    if theta not in M.kinds:
        raise UnknownCurve(f"unknown curve {theta!r}")
    if M.kinds[theta] != ARC:
        raise DualArcRejected("closed", f"{theta!r} is a closed curve, not an arc")
    hits = []
    for v in M.vertices:
        labs = {M.label(d) for d in v}
        if len(v) == 4 and theta in labs:
            hits.extend(labs - {theta})
    if len(hits) != 1:
        raise DualArcRejected(
            "crossings", f"{theta!r} meets the curves in {len(hits)} points, not exactly one")
    gamma = hits[0]
    if M.kinds[gamma] != CLOSED or gamma not in set(C) | set(D):
        raise DualArcRejected("crossings", f"{theta!r} crosses {gamma!r}, which is in neither system")
    if not arc_essential(M, theta):
        raise DualArcRejected("inessential", f"{theta!r} is inessential")
    return DualArc(theta, gamma, "C" if gamma in C else "D")


@dataclass(frozen=True)
class Placement:
    edge: int
    curve: str
    regions: tuple
    punctures: tuple

    def line(self):
        return (f"edge={self.edge} regions={self.regions[0]},{self.regions[1]} "
                f"punctures={self.punctures[0]},{self.punctures[1]}")


def _puncture_ids(M):
    out = {}
    for r, reg in enumerate(M.regions):
        for k in range(reg.punctures):
            out[(r, k)] = len(out)
    return out


def find_dual_arcs(M, C, D):
    """Edges of ``C`` and ``D`` with a punctured region on each side.

    The returned placements refer to the map with arcs removed (see
    :func:`closed_part`); ``materialize`` turns one into an arc.
    """
    C, D = _check_partition(M, C, D)
    N = closed_part(M)
    pid = _puncture_ids(N)
    out = []
    for e, lab in enumerate(N.edge_label):
        ra, rb = N.region_of_dart(2 * e), N.region_of_dart(2 * e + 1)
        pa, pb = N.regions[ra].punctures, N.regions[rb].punctures
        if pa == 0 or pb == 0:
            continue
        if ra == rb:
            ids = (pid[(ra, 0)], pid[(ra, 1)] if pa > 1 else pid[(ra, 0)])
        else:
            ids = (pid[(ra, 0)], pid[(rb, 0)])
        out.append(Placement(e, lab, (ra, rb), ids))
    return out


def closed_part(M):
    return delete_components(M, M.closed_curves())


def materialize(M, placement, name="theta"):
    """The closed part of ``M`` with a new arc through ``placement``."""
    return insert_arc(closed_part(M), placement.edge, name)


def infer_systems(M, theta=None):
    """Split the closed curves into two systems by 2-colouring their crossing
    graph.  With ``theta`` given, the curve it crosses lands in ``C``."""
    curves = M.closed_curves()
    adj = {c: set() for c in curves}
    for v in M.vertices:
        labs = {M.label(d) for d in v}
        if len(v) == 4 and labs <= set(curves):
            x, y = labs
            adj[x].add(y)
            adj[y].add(x)
    colour = {}
    for start in curves:
        if start in colour:
            continue
        if colour:
            raise MalformedPartition("crossing graph of the closed curves is disconnected")
        colour[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    raise MalformedPartition(f"{x} and {y} cross but must share a system")
    a = frozenset(c for c in curves if colour[c] == 0)
    b = frozenset(c for c in curves if colour[c] == 1)
    if theta is not None:
        hit = [M.label(d) for v in M.vertices if len(v) == 4
               for d in v if M.label(d) != theta and theta in {M.label(x) for x in v}]
        if hit and hit[0] in b:
            a, b = b, a
    return a, b

