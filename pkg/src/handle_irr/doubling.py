"""The boundary of ``H = S x I`` as the double of ``S``, and the disc
boundary obtained from a dual arc.

Curve ``c`` of ``S`` appears on ``S x {1}`` as ``c.1`` (same orientation) and on
``S x {0}`` as ``c.0`` (orientation reversed).  The boundary annulus
``dS x I`` is not stored as such: the two punctured regions are merged into
one region.
"""
from dataclasses import dataclass, field

from . import cmap
from .penner import DualArc, check_penner_pair, validate_dual_arc
from .surfmap import (
    CLOSED, InconsistentMap, MapError, _rebuild_cellular, _Work, arc_ends,
    delete_components,
)

DISC = "dDelta"
_SPINE = "_dD"

S0, S1, DISC_SIDE = "S0", "S1", "disc-boundary"


class UnsupportedBoundary(MapError):
    pass


class ProvenanceError(MapError):
    pass


class InternalConsistencyError(AssertionError):
    pass


def copy_name(c, side):
    return f"{c}.{side}"


@dataclass(frozen=True)
class DoubledMap:
    map: object
    mirror: dict = field(compare=False)
    source: object = field(default=None, compare=False)
    disc: str = None
    C: frozenset = None
    D: frozenset = None
    swapped: bool = False

    def side_of(self, name):
        if name == self.disc:
            return DISC_SIDE
        return S0 if name.endswith(".0") else S1

    @property
    def side_tags(self):
        return tuple(self.side_of(lab) for lab in self.map.edge_label)


@dataclass(frozen=True)
class QRPair:
    Q: frozenset
    R: frozenset


def _double_work(M):
    """Working copy of the closed double of ``M`` (one boundary circle)."""
    n = M.num_darts
    w = _Work(M)
    nreg = len(w.regions)
    sinv = {s: d for d, s in enumerate(M.sigma)}
    for d in range(n):
        w.label[d] = copy_name(M.label(d), 1)
    for d in range(n):
        x = n + d
        w.sigma[x] = n + sinv[d]
        w.sinv[n + sinv[d]] = x
        w.alpha[x] = n + (d ^ 1)
        w.label[x] = copy_name(M.label(d), 0)
        w.region_of[x] = nreg + M.region_of_dart(d ^ 1)
    for g, p, anchors in list(w.regions):
        w.regions.append([g, p, [n + (a ^ 1) for a in anchors]])
    w._next = 2 * n
    w.kinds = {}
    for side in (1, 0):
        for c, kind in M.curves:
            w.kinds[copy_name(c, side)] = kind
    punctured = [r for r, reg in enumerate(M.regions) if reg.punctures]
    if len(punctured) != 1 or M.regions[punctured[0]].punctures != 1:
        raise UnsupportedBoundary("the boundary circle must lie in exactly one region")
    p = punctured[0]
    a = w._merge_regions(p, nreg + p)
    w.regions[a][1] = 0
    w.regions[a][2] = []
    w.genus = 2 * M.genus
    w.boundary = 0
    w.recompute_genus(a)
    return w


def double_surface(M):
    """Close ``S x I`` up: both copies of ``S`` glued along the boundary annulus."""
    if M.boundary != 1:
        raise UnsupportedBoundary(f"need exactly one boundary circle, surface has b={M.boundary}")
    base = delete_components(M, M.closed_curves())
    out = _double_work(base).to_map()
    mirror = {c: (copy_name(c, 0), copy_name(c, 1)) for c in base.closed_curves()}
    return DoubledMap(out, mirror, source=M)


def _insert_frontier(w, spine, name):
    """Add the boundary of a regular neighbourhood of the curves ``spine``.

    The frontier is read off the faces of the sub-map on ``spine``: between
    consecutive spine darts of such a face it sweeps counterclockwise around
    a vertex, crossing the other darts there close to that vertex.
    """
    traces = w.traces_by_region()
    for r, t in traces.items():
        g, p, _ = w.regions[r]
        if g or p or t != 1:
            raise MapError("frontier insertion needs every region to be a disc")
    G = {d for d in w.sigma if w.label[d] in spine}
    start = min(G)
    crossings = []
    seen = set()
    d = start
    while d not in seen:
        seen.add(d)
        x = w.sigma[w.alpha[d]]
        while x not in G:
            crossings.append(x)
            x = w.sigma[x]
        d = x
    if d != start or seen != G:
        raise InconsistentMap("neighbourhood of the spine has more than one boundary circle")
    if not crossings:
        raise InconsistentMap("frontier crosses nothing")
    split = {}
    for h in crossings:
        z = w.alpha[h]
        i, o = w.new_dart(), w.new_dart()
        w.alpha.update({h: i, i: h, o: z, z: o})
        w.label[i] = w.label[o] = w.label[h]
        split[h] = (i, o)
    m = len(crossings)
    fout = [w.new_dart() for _ in range(m)]
    fback = [w.new_dart() for _ in range(m)]
    for j in range(m):
        a, b = fout[j], fback[(j + 1) % m]
        w.alpha[a], w.alpha[b] = b, a
        w.label[a] = w.label[b] = name
    for j, h in enumerate(crossings):
        i, o = split[h]
        ring = (o, fout[j], i, fback[j])
        for k, x in enumerate(ring):
            w.sigma[x] = ring[(k + 1) % 4]
            w.sinv[ring[(k + 1) % 4]] = x
    w.kinds[name] = CLOSED
    _rebuild_cellular(w)


def attach_disc_boundary(DM, dual):
    """Add the boundary of the band-sum disc built from dual arc ``dual``.

    On ``S x {0}`` it runs as two parallels of the arc, across the boundary
    annulus as four spanning arcs, and on ``S x {1}`` as the two sides of a
    neighbourhood of the arc together with the curve it crosses.
    """
    if not isinstance(dual, DualArc):
        raise ProvenanceError("attach_disc_boundary needs a validated DualArc")
    M = DM.source
    if M is None or dual.arc not in M.kinds:
        raise ProvenanceError("dual arc does not belong to the doubled surface's source")
    theta, gamma = dual.arc, dual.crossed_curve
    base = delete_components(M, M.closed_curves() + [theta])
    n = base.num_darts
    w = _double_work(base)
    for h in arc_ends(base, theta):
        w.splice_ends(h, n + h)
    for d, lab in w.label.items():
        if lab in (copy_name(theta, 0), copy_name(theta, 1)):
            w.label[d] = _SPINE
    del w.kinds[copy_name(theta, 0)], w.kinds[copy_name(theta, 1)]
    w.kinds[_SPINE] = CLOSED
    _insert_frontier(w, {_SPINE, copy_name(gamma, 1)}, DISC)
    while True:
        spine = [d for d, lab in w.label.items() if lab == _SPINE]
        if not spine:
            break
        w.remove_edge(min(spine))
    w.smooth()
    del w.kinds[_SPINE]
    out = w.to_map()

    return DoubledMap(out, DM.mirror, source=M, disc=DISC,
                      swapped=dual.crossed_system == "D")


def qr_pair(C, D):
    """``Q = D.0 + C.1 + {disc}`` and ``R = C.0 + D.1``, with ``C`` the system
    containing the curve crossed by the dual arc."""
    Q = frozenset([copy_name(d, 0) for d in D] + [copy_name(c, 1) for c in C] + [DISC])
    R = frozenset([copy_name(c, 0) for c in C] + [copy_name(d, 1) for d in D])
    return QRPair(Q, R)


def build_QR(M, C, D, theta):
    """Double ``S``, add the disc boundary and check that ``(Q, R)`` is a
    Penner pair on the closed surface."""
    pair = check_penner_pair(M, C, D)
    if not pair.passed:
        raise MapError(f"(C, D) is not a Penner pair: fails {pair.failed()}")
    dual = validate_dual_arc(M, theta, C, D)
    C, D = frozenset(C), frozenset(D)
    if dual.crossed_system == "D":
        C, D = D, C
    DM = attach_disc_boundary(double_surface(M), dual)
    DM = DoubledMap(DM.map, DM.mirror, DM.source, DM.disc, C, D, DM.swapped)
    qr = qr_pair(C, D)
    report = check_penner_pair(DM.map, qr.Q, qr.R)
    if not report.passed:
        raise InternalConsistencyError(
            f"(Q, R) failed {report.failed()} on the doubled surface: " + "; ".join(report.lines()))
    return DM, qr, report


def dumps_doubled(DM, qr=None):
    """``.cmap`` text with side annotations and the Q/R partition as comments."""
    comments = []
    for side in (S0, S1, DISC_SIDE):
        edges = [str(e) for e, t in enumerate(DM.side_tags) if t == side]
        if edges:
            comments.append(f"side: {side} : {' '.join(edges)}")
    if qr is not None:
        comments.append("curveset Q: " + " ".join(sorted(qr.Q)))
        comments.append("curveset R: " + " ".join(sorted(qr.R)))
    return cmap.dumps(DM.map, comments)


def loads_doubled(text):
    """Inverse of :func:`dumps_doubled`: ``(map, side_tags, qr)``."""
    M = cmap.loads(text)
    tags = [None] * M.num_edges
    Q = R = None
    for line in cmap.comment_lines(text):
        if line.startswith("side:"):
            side, _, edges = line[len("side:"):].partition(":")
            for e in edges.split():
                tags[int(e)] = side.strip()
        elif line.startswith("curveset Q:"):
            Q = frozenset(line.split(":", 1)[1].split())
        elif line.startswith("curveset R:"):
            R = frozenset(line.split(":", 1)[1].split())
    qr = QRPair(Q, R) if Q is not None and R is not None else None
    return M, tuple(tags), qr
