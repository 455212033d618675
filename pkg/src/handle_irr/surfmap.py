"""
Curve systems on compact orientable surfaces, encoded as combinatorial maps.

Darts are integers ``0 .. 2E-1``; edge ``e`` owns darts ``2e`` and ``2e+1`` and
the edge involution is ``d ^ 1``.  ``sigma[d]`` is the counterclockwise
successor of ``d`` around its vertex.  Faces are the orbits of
``phi(d) = sigma[d ^ 1]``; with a counterclockwise ``sigma`` the face traced
through ``d`` is the one lying to the right of ``d``.

Vertices have degree 4 (a transverse crossing of two curves), degree 1 (the
dangling end of an arc, which reaches the boundary circle of the region it
sits in) or degree 2 with both darts on one edge (a *free loop*: a closed
curve crossing nothing).  Boundary circles are punctures recorded in the
region table, together with genus, so that non-filling systems can be
represented.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

CLOSED = "closed"
ARC = "arc"

ESSENTIAL = "essential"
BOUNDS_DISC = "bounds-disc"
BOUNDARY_PARALLEL = "boundary-parallel"


class MapError(ValueError):
    pass


class InconsistentMap(MapError):
    pass


class MalformedLabels(MapError):
    pass


class UnknownCurve(MapError):
    pass


class WrongKind(MapError):
    pass


class AmbiguousEmbedding(MapError):
    """The encoding does not determine the requested embedding."""


@dataclass(frozen=True)
class Region:
    traces: frozenset
    genus: int
    punctures: int
    anchors: tuple = ()

    @property
    def euler_characteristic(self):
        return 2 - 2 * self.genus - len(self.traces) - self.punctures

    def is_disc(self):
        return self.genus == 0 and len(self.traces) == 1 and self.punctures == 0


@dataclass(frozen=True)
class CombMap:
    """An immutable curve system on a surface of genus ``genus`` with
    ``boundary`` boundary circles.

    ``curves`` is an ordered tuple of ``(name, kind)`` pairs and
    ``edge_label[e]`` names the curve owning edge ``e``.
    """

    sigma: tuple
    edge_label: tuple
    curves: tuple
    regions: tuple
    genus: int
    boundary: int

    @property
    def num_darts(self):
        return len(self.sigma)

    @property
    def num_edges(self):
        return len(self.edge_label)

    @cached_property
    def kinds(self):
        return dict(self.curves)

    def label(self, dart):
        return self.edge_label[dart >> 1]

    @property
    def surface_euler_characteristic(self):
        return 2 - 2 * self.genus - self.boundary

    @cached_property
    def vertices(self):
        return _cycles(self.sigma)

    @cached_property
    def faces(self):
        return trace_faces(self)

    @cached_property
    def vertex_of(self):
        out = [0] * self.num_darts
        for i, cyc in enumerate(self.vertices):
            for d in cyc:
                out[d] = i
        return out

    @cached_property
    def face_of(self):
        out = [0] * self.num_darts
        for i, cyc in enumerate(self.faces):
            for d in cyc:
                out[d] = i
        return out

    @cached_property
    def region_of_trace(self):
        out = {}
        for r, reg in enumerate(self.regions):
            for t in reg.traces:
                out[t] = r
        return out

    def region_of_dart(self, dart):
        return self.region_of_trace[self.face_of[dart]]

    def degree(self, dart):
        return len(self.vertices[self.vertex_of[dart]])

    def edges_of(self, name):
        return [e for e, lab in enumerate(self.edge_label) if lab == name]

    def closed_curves(self):
        return [c for c, k in self.curves if k == CLOSED]

    def arcs(self):
        return [c for c, k in self.curves if k == ARC]


def _cycles(perm):
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return out


def trace_faces(M):
    """Face traces of ``M``: orbits of ``d -> sigma[d ^ 1]``, each started at
    the smallest unvisited dart."""
    sigma = M.sigma
    return _cycles([sigma[d ^ 1] for d in range(len(sigma))])


# ---------------------------------------------------------------------------
# validation

def validate_map(M):
    """Return a list of violated invariants; an empty list means ``M`` is valid."""
    n = len(M.sigma)
    if n != 2 * len(M.edge_label):
        return [f"sigma has {n} darts but there are {len(M.edge_label)} edges"]
    if sorted(M.sigma) != list(range(n)):
        return ["sigma not a bijection on darts 0..%d" % (n - 1)]
    out = []
    kinds = M.kinds
    if len(kinds) != len(M.curves):
        out.append("duplicate curve names")
    for e, lab in enumerate(M.edge_label):
        if lab not in kinds:
            out.append(f"edge {e} labelled by unknown curve {lab!r}")
    for name in kinds:
        if not M.edges_of(name):
            out.append(f"curve {name!r} owns no edges")
    if out:
        return out

    for v in M.vertices:
        deg = len(v)
        labs = [M.label(d) for d in v]
        if deg == 4:
            if labs[0] != labs[2] or labs[1] != labs[3] or labs[0] == labs[1]:
                out.append(f"vertex at dart {v[0]} does not alternate between two curves: {labs}")
        elif deg == 1:
            if kinds[labs[0]] != ARC:
                out.append(f"degree-1 vertex at dart {v[0]} on closed curve {labs[0]!r}")
        elif deg == 2 and v[0] ^ 1 == v[1]:
            if kinds[labs[0]] != CLOSED:
                out.append(f"free loop at dart {v[0]} labelled by arc {labs[0]!r}")
        else:
            out.append(f"vertex degree {deg} at dart {v[0]} not in {{1,4}}")
    if out:
        return out

    try:
        curve_components(M)
    except MalformedLabels as exc:
        out.append(str(exc))

    nfaces = len(M.faces)
    owner = {}
    for r, reg in enumerate(M.regions):
        for t in reg.traces:
            if not 0 <= t < nfaces:
                out.append(f"region {r} lists unknown trace {t}")
            elif t in owner:
                out.append(f"trace {t} belongs to regions {owner[t]} and {r}")
            else:
                owner[t] = r
        if reg.genus < 0 or reg.punctures < 0:
            out.append(f"region {r} has negative genus or puncture count")
        if len(reg.anchors) != reg.punctures:
            out.append(f"region {r} has {reg.punctures} punctures but {len(reg.anchors)} anchors")
        for a in reg.anchors:
            if not reg.traces:
                if a != -1:
                    out.append(f"region {r} has no traces but anchor {a}")
            elif not (0 <= a < n) or M.face_of[a] not in reg.traces:
                out.append(f"anchor {a} of region {r} is not on a trace of the region")
    for t in range(nfaces):
        if t not in owner:
            out.append(f"trace {t} belongs to no region")
    if n == 0 and len(M.regions) != 1:
        out.append("an empty map needs exactly one region")
    if out:
        return out

    total_p = sum(r.punctures for r in M.regions)
    if total_p != M.boundary:
        out.append(f"regions hold {total_p} punctures but the surface has b={M.boundary}")
    chi = _graph_chi(M) + sum(r.euler_characteristic for r in M.regions)
    if chi != M.surface_euler_characteristic:
        out.append(f"Euler identity fails: map gives {chi}, surface_sig gives {M.surface_euler_characteristic}")
    for d in range(n):
        if M.sigma[d] == d:
            try:
                endpoint_puncture(M, d)
            except MapError as exc:
                out.append(str(exc))
    return out


def _graph_chi(M):
    return len(M.vertices) - M.num_edges


def euler_characteristic(M):
    """V - E + the Euler characteristics of the regions; checked against the
    surface signature."""
    chi = _graph_chi(M) + sum(r.euler_characteristic for r in M.regions)
    if chi != M.surface_euler_characteristic:
        raise InconsistentMap(
            f"map Euler characteristic {chi} != surface_sig value {M.surface_euler_characteristic}")
    return chi


def endpoint_puncture(M, dart):
    """The puncture ``(region, k)`` reached by the arc end at degree-1 ``dart``."""
    r = M.region_of_dart(dart)
    reg = M.regions[r]
    if reg.punctures == 0:
        raise MapError(f"arc end at dart {dart} lies in unpunctured region {r}")
    if reg.punctures == 1:
        return (r, 0)
    for k, a in enumerate(reg.anchors):
        if a == dart:
            return (r, k)
    raise MapError(f"arc end at dart {dart}: region {r} has several punctures and none is anchored here")


# ---------------------------------------------------------------------------
# curves

def curve_components(M):
    """Map each curve name to its dart walk.

    Closed curves start at their smallest dart; arcs start at the dangling
    dart of smaller id.  At a crossing the walk continues straight through,
    i.e. the continuation of the arriving dart ``y`` is ``sigma(sigma(y))``.
    """
    sigma = M.sigma
    out = {}
    for name, kind in M.curves:
        edges = M.edges_of(name)
        if not edges:
            raise MalformedLabels(f"curve {name!r} owns no edges")
        darts = [d for e in edges for d in (2 * e, 2 * e + 1)]
        if kind == ARC:
            ends = [d for d in darts if sigma[d] == d]
            if len(ends) != 2:
                raise MalformedLabels(f"arc {name!r} has {len(ends)} endpoints, expected 2")
            start = min(ends)
        else:
            start = min(darts)
        walk = []
        seen = set()
        x = start
        while True:
            if x in seen or (x ^ 1) in seen:
                raise MalformedLabels(f"curve {name!r} is not simple (dart {x} revisited)")
            if M.label(x) != name:
                raise MalformedLabels(f"walk of {name!r} runs onto curve {M.label(x)!r} at dart {x}")
            seen.add(x)
            walk.append(x)
            y = x ^ 1
            deg = M.degree(y)
            if deg == 1:
                if kind != ARC:
                    raise MalformedLabels(f"closed curve {name!r} ends at dart {y}")
                break
            if deg == 4:
                x = sigma[sigma[y]]
            elif deg == 2 and sigma[y] == x:
                x = sigma[y]
            else:
                raise MalformedLabels(f"curve {name!r} meets a degree-{deg} vertex at dart {y}")
            if x == start:
                if kind == ARC:
                    raise MalformedLabels(f"arc {name!r} closes up")
                break
        if {d >> 1 for d in walk} != set(edges):
            raise MalformedLabels(f"curve {name!r} has more than one component")
        out[name] = walk
    return out


def _check_curve(M, name):
    if name not in M.kinds:
        raise UnknownCurve(f"unknown curve {name!r}")


def crossing_count(M, x, y):
    """Number of crossings shared by curves ``x`` and ``y``."""
    _check_curve(M, x)
    _check_curve(M, y)
    if x == y:
        raise ValueError("crossing_count needs two distinct curves")
    want = {x, y}
    return sum(1 for v in M.vertices
               if len(v) == 4 and {M.label(d) for d in v} == want)


def bigon_faces(M):
    """Faces that are unpunctured discs of length 2 bounded by two curves."""
    out = []
    for t, face in enumerate(M.faces):
        if len(face) != 2:
            continue
        reg = M.regions[M.region_of_trace[t]]
        if reg.is_disc() and M.label(face[0]) != M.label(face[1]):
            out.append(face)
    return out


# ---------------------------------------------------------------------------
# mutable working representation used by every map surgery

class _Work:
    """Mutable map with explicit involution and per-dart region ids.

    After each surgery the genus of the affected region is recovered from the
    global Euler identity, which has exactly one unknown at a time.
    """

    def __init__(self, M):
        n = M.num_darts
        self.sigma = {d: M.sigma[d] for d in range(n)}
        self.sinv = {M.sigma[d]: d for d in range(n)}
        self.alpha = {d: d ^ 1 for d in range(n)}
        self.label = {d: M.label(d) for d in range(n)}
        self.kinds = dict(M.curves)
        self.genus = M.genus
        self.boundary = M.boundary
        self.regions = [[r.genus, r.punctures, list(r.anchors)] for r in M.regions]
        self.region_of = {d: M.region_of_dart(d) for d in range(n)}
        self.empty_region = 0 if n == 0 else None
        self._next = n

    def new_dart(self):
        d = self._next
        self._next += 1
        return d

    # --- combinatorics
    def faces(self):
        seen = set()
        out = []
        for start in sorted(self.sigma):
            if start in seen:
                continue
            cyc = []
            d = start
            while d not in seen:
                seen.add(d)
                cyc.append(d)
                d = self.sigma[self.alpha[d]]
            out.append(cyc)
        return out

    def num_vertices(self):
        seen = set()
        count = 0
        for start in self.sigma:
            if start in seen:
                continue
            count += 1
            d = start
            while d not in seen:
                seen.add(d)
                d = self.sigma[d]
        return count

    def live_regions(self):
        return [r for r, reg in enumerate(self.regions) if reg is not None]

    def traces_by_region(self):
        out = {r: 0 for r in self.live_regions()}
        for f in self.faces():
            out[self.region_of[f[0]]] += 1
        return out

    def region_chi(self, r, traces):
        g, p, _ = self.regions[r]
        return 2 - 2 * g - traces - p

    def recompute_genus(self, r):
        traces = self.traces_by_region()
        chi_total = 2 - 2 * self.genus - self.boundary
        graph = self.num_vertices() - len(self.alpha) // 2
        others = sum(self.region_chi(s, t) for s, t in traces.items() if s != r)
        chi_r = chi_total - graph - others
        twice_g = 2 - traces[r] - self.regions[r][1] - chi_r
        if twice_g < 0 or twice_g % 2:
            raise InconsistentMap(
                f"no genus of region {r} restores the Euler identity (2g = {twice_g})")
        self.regions[r][0] = twice_g // 2

    # --- surgery
    def _detach(self, x):
        n = self.sigma.pop(x)
        p = self.sinv.pop(x)
        if p != x:
            self.sigma[p] = n
            self.sinv[n] = p

    def _attach_after(self, x, p):
        """Insert dart ``x`` right after ``p`` in the rotation (``p is None``: alone)."""
        if p is None:
            self.sigma[x] = x
            self.sinv[x] = x
            return
        n = self.sigma[p]
        self.sigma[p] = x
        self.sinv[x] = p
        self.sigma[x] = n
        self.sinv[n] = x

    def _merge_regions(self, r1, r2):
        if r1 == r2:
            return r1
        keep, drop = min(r1, r2), max(r1, r2)
        for d, r in self.region_of.items():
            if r == drop:
                self.region_of[d] = keep
        self.regions[keep][1] += self.regions[drop][1]
        self.regions[keep][2].extend(self.regions[drop][2])
        self.regions[drop] = None
        return keep

    def _reseat(self, r, gone, replacement=None):
        anchors = self.regions[r][2]
        for i, a in enumerate(anchors):
            if a in gone:
                if replacement is not None and replacement.get(a) in self.region_of:
                    anchors[i] = replacement[a]
                else:
                    live = [d for d, s in self.region_of.items() if s == r]
                    anchors[i] = min(live) if live else -1

    def remove_edge(self, d):
        e = (d, self.alpha[d])
        r = self._merge_regions(self.region_of[e[0]], self.region_of[e[1]])
        for x in e:
            self._detach(x)
            del self.alpha[x]
            del self.label[x]
            del self.region_of[x]
        self._reseat(r, set(e))
        if not self.sigma:
            self.empty_region = r
        self.recompute_genus(r)

    def smooth(self):
        """Splice away degree-2 vertices joining two different edges."""
        changed = True
        while changed:
            changed = False
            for u in sorted(self.sigma):
                w = self.sigma[u]
                if w == u or self.sigma[w] != u or self.alpha[u] == w:
                    continue
                if self.label[u] != self.label[w]:
                    raise MalformedLabels(
                        f"degree-2 vertex joins curves {self.label[u]!r} and {self.label[w]!r}")
                a, c = self.alpha[u], self.alpha[w]
                r = self.region_of[u]
                for x in (u, w):
                    del self.sigma[x], self.sinv[x], self.alpha[x], self.label[x], self.region_of[x]
                self.alpha[a] = c
                self.alpha[c] = a
                for s in {r, self.region_of.get(a), self.region_of.get(c)} - {None}:
                    self._reseat(s, {u, w}, {u: c, w: a})
                changed = True
                break

    def splice_ends(self, h1, h2):
        """Join two dangling arc ends into one edge (a free loop if they are
        the two ends of one edge).  The caller adjusts puncture counts first."""
        if self.sigma[h1] != h1 or self.sigma[h2] != h2:
            raise MapError("splice_ends needs two degree-1 darts")
        r = self.region_of[h1]
        if self.region_of[h2] != r:
            raise AmbiguousEmbedding("arc ends lie in different regions")
        faces = self.faces()
        face_of = {d: i for i, f in enumerate(faces) for d in f}
        same_trace = face_of[h1] == face_of[h2]
        old_face = set(faces[face_of[h1]])
        old_traces = sum(1 for f in faces if self.region_of[f[0]] == r)

        k1, k2 = self.alpha[h1], self.alpha[h2]
        if k1 == h2:
            self.sigma[h1], self.sigma[h2] = h2, h1
            self.sinv[h1], self.sinv[h2] = h2, h1
        else:
            for x in (h1, h2):
                del self.sigma[x], self.sinv[x], self.alpha[x], self.label[x], self.region_of[x]
            self.alpha[k1] = k2
            self.alpha[k2] = k1
            self._reseat(r, {h1, h2})

        if not same_trace:
            self.recompute_genus(r)
            return
        own = {h1, h2, k1, k2}
        isolated = old_face <= own
        reg = self.regions[r]
        if reg[0] != 0 or reg[1] != 0 or not (old_traces == 1 or isolated):
            raise AmbiguousEmbedding(
                f"closing an arc inside region {r} (genus {reg[0]}, {old_traces} traces, "
                f"{reg[1]} punctures) does not determine how the region splits")
        pieces = [f for f in self.faces() if set(f) & old_face]
        if len(pieces) != 2:
            raise InconsistentMap("splicing a trace to itself did not split it")
        pieces.sort(key=min)
        new_r = len(self.regions)
        self.regions.append([0, 0, []])
        for d in pieces[0]:
            self.region_of[d] = new_r
        self.recompute_genus(r)
        self.recompute_genus(new_r)

    # --- output
    def to_map(self):
        order = {}
        k = 0
        for d in sorted(self.sigma):
            if d not in order:
                a = self.alpha[d]
                lo, hi = min(d, a), max(d, a)
                order[lo], order[hi] = 2 * k, 2 * k + 1
                k += 1
        n = 2 * k
        sigma = [0] * n
        labels = [None] * k
        for d, nd in order.items():
            sigma[nd] = order[self.sigma[d]]
            labels[nd >> 1] = self.label[d]
        present = set(labels)
        curves = tuple((c, kind) for c, kind in self.kinds.items() if c in present)
        faces = _cycles([sigma[d ^ 1] for d in range(n)])
        inv = {nd: d for d, nd in order.items()}
        traces = {r: set() for r in self.live_regions()}
        for t, f in enumerate(faces):
            rs = {self.region_of[inv[d]] for d in f}
            if len(rs) != 1:
                raise InconsistentMap(f"face {t} straddles regions {sorted(rs)}")
            traces[rs.pop()].add(t)
        regions = []
        for r in self.live_regions():
            if not traces[r] and r != self.empty_region:
                continue
            g, p, anchors = self.regions[r]
            regions.append(Region(frozenset(traces[r]), g, p,
                                  tuple(order[a] if a in order else -1 for a in anchors)))
        return CombMap(tuple(sigma), tuple(labels), curves, tuple(regions),
                       self.genus, self.boundary)


def _rebuild_cellular(work):
    """Make every face its own unpunctured disc region and check the Euler identity."""
    faces = work.faces()
    work.regions = [[0, 0, []] for _ in faces]
    work.region_of = {d: i for i, f in enumerate(faces) for d in f}
    chi = work.num_vertices() - len(work.alpha) // 2 + len(faces)
    if work.boundary or chi != 2 - 2 * work.genus:
        raise InconsistentMap(
            f"cellular rebuild gives Euler characteristic {chi}, expected {2 - 2 * work.genus - work.boundary}")


# ---------------------------------------------------------------------------
# derived maps and tests

def delete_components(M, keep):
    """Remove every curve not in ``keep`` edge by edge, then smooth."""
    keep = set(keep)
    for c in keep:
        _check_curve(M, c)
    if all(c in keep for c in M.kinds):
        return M
    w = _Work(M)
    for c, _ in M.curves:
        if c in keep:
            continue
        for e in M.edges_of(c):
            w.remove_edge(2 * e)
    w.smooth()
    for c in list(w.kinds):
        if c not in keep:
            del w.kinds[c]
    return w.to_map()


def mirror(M):
    """The same curve system on the oppositely oriented surface."""
    w = _Work(M)
    w.sigma, w.sinv = w.sinv, w.sigma
    w.region_of = {d: w.region_of[d ^ 1] for d in w.region_of}
    for reg in w.regions:
        reg[2] = [a ^ 1 if a >= 0 else a for a in reg[2]]
    return w.to_map()


def relabel(M, dart_perm):
    """Renumber darts by ``dart_perm`` (which must satisfy p[d^1] == p[d]^1)."""
    n = M.num_darts
    p = list(dart_perm)
    if sorted(p) != list(range(n)) or any(p[d ^ 1] != p[d] ^ 1 for d in range(n)):
        raise ValueError("dart_perm must be a permutation commuting with the edge involution")
    w = _Work(M)
    w.sigma = {p[d]: p[s] for d, s in w.sigma.items()}
    w.sinv = {s: d for d, s in w.sigma.items()}
    w.alpha = {p[d]: p[a] for d, a in w.alpha.items()}
    w.label = {p[d]: lab for d, lab in w.label.items()}
    w.region_of = {p[d]: r for d, r in w.region_of.items()}
    for reg in w.regions:
        reg[2] = [p[a] if a >= 0 else a for a in reg[2]]
    return w.to_map()


def _adjacent_regions(M, name):
    out = []
    for e in M.edges_of(name):
        for d in (2 * e, 2 * e + 1):
            r = M.region_of_dart(d)
            if r not in out:
                out.append(r)
    return out


def is_essential(M, c):
    """``essential``, ``bounds-disc`` or ``boundary-parallel`` for closed ``c``."""
    _check_curve(M, c)
    if M.kinds[c] != CLOSED:
        raise WrongKind(f"{c!r} is an arc; use arc_essential")
    N = delete_components(M, {c})
    regs = [N.regions[r] for r in _adjacent_regions(N, c)]
    if any(r.genus == 0 and len(r.traces) == 1 and r.punctures == 0 for r in regs):
        return BOUNDS_DISC
    if any(r.genus == 0 and len(r.traces) == 1 and r.punctures == 1 for r in regs):
        return BOUNDARY_PARALLEL
    return ESSENTIAL


def arc_ends(M, a):
    ends = sorted(d for e in M.edges_of(a) for d in (2 * e, 2 * e + 1) if M.sigma[d] == d)
    if len(ends) != 2:
        raise MalformedLabels(f"arc {a!r} has {len(ends)} endpoints")
    return ends


def arc_essential(M, a):
    """Whether arc ``a`` is essential.

    Arcs joining distinct boundary circles always are.  Otherwise the arc is
    closed up through its puncture (filling that puncture) and it is
    inessential exactly when the resulting loop bounds an unpunctured disc.
    """
    _check_curve(M, a)
    if M.kinds[a] != ARC:
        raise WrongKind(f"{a!r} is a closed curve")
    h1, h2 = arc_ends(M, a)
    p1, p2 = endpoint_puncture(M, h1), endpoint_puncture(M, h2)
    if p1 != p2:
        return True
    r, k = p1
    reg = M.regions[r]
    if reg.genus != 0 or reg.punctures != 1:
        raise AmbiguousEmbedding(
            f"arc {a!r} ends in region {r} with genus {reg.genus} and {reg.punctures} punctures")
    w = _Work(M)
    w.regions[r][1] -= 1
    del w.regions[r][2][k]
    w.boundary -= 1
    w.splice_ends(h1, h2)
    w.kinds[a] = CLOSED
    closed = w.to_map()
    return is_essential(closed, a) != BOUNDS_DISC


def are_parallel(M, x, y):
    """Whether disjoint closed curves ``x`` and ``y`` cobound an embedded annulus."""
    for c in (x, y):
        _check_curve(M, c)
        if M.kinds[c] != CLOSED:
            raise WrongKind(f"{c!r} is not a closed curve")
    if x == y:
        raise ValueError("are_parallel needs two distinct curves")
    if crossing_count(M, x, y):
        return False
    N = delete_components(M, {x, y})
    for reg in N.regions:
        if reg.genus or reg.punctures or len(reg.traces) != 2:
            continue
        labs = [{N.label(d) for d in N.faces[t]} for t in sorted(reg.traces)]
        if sorted(map(sorted, labs)) == [[x], [y]] or sorted(map(sorted, labs)) == [[y], [x]]:
            return True
    return False


# ---------------------------------------------------------------------------
# isomorphism

def is_isomorphic(M1, M2):
    """Whether a dart bijection carries ``M1`` to ``M2`` preserving curve
    names, rotations, involution and the region table (anchors ignored)."""
    if (M1.num_darts != M2.num_darts or M1.genus != M2.genus
            or M1.boundary != M2.boundary or dict(M1.curves) != dict(M2.curves)
            or len(M1.regions) != len(M2.regions)):
        return False
    n = M1.num_darts
    if n == 0:
        return M1.regions[0].genus == M2.regions[0].genus
    comps = _components(M1)

    def extend(f, start1, start2):
        f = dict(f)
        used = set(f.values())
        stack = [(start1, start2)]
        while stack:
            a, b = stack.pop()
            if a in f:
                if f[a] != b:
                    return None
                continue
            if b in used or M1.label(a) != M2.label(b) or (M1.sigma[a] == a) != (M2.sigma[b] == b):
                return None
            f[a] = b
            used.add(b)
            stack.append((M1.sigma[a], M2.sigma[b]))
            stack.append((a ^ 1, b ^ 1))
        return f

    def search(i, f):
        if i == len(comps):
            return f if _regions_match(M1, M2, f) else None
        used = set(f.values())
        for b in range(n):
            if b in used:
                continue
            g = extend(f, comps[i], b)
            if g is not None:
                res = search(i + 1, g)
                if res is not None:
                    return res
        return None

    return search(0, {}) is not None


def _components(M):
    seen = set()
    starts = []
    for d in range(M.num_darts):
        if d in seen:
            continue
        starts.append(d)
        stack = [d]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend((M.sigma[x], x ^ 1))
    return starts


def _regions_match(M1, M2, f):
    pairing = {}
    for t, face in enumerate(M1.faces):
        r1 = M1.region_of_trace[t]
        r2 = M2.region_of_dart(f[face[0]])
        if pairing.setdefault(r1, r2) != r2:
            return False
    if len(set(pairing.values())) != len(pairing):
        return False
    for r1, r2 in pairing.items():
        a, b = M1.regions[r1], M2.regions[r2]
        if (a.genus, a.punctures, len(a.traces)) != (b.genus, b.punctures, len(b.traces)):
            return False
    return True


# ---------------------------------------------------------------------------
# construction from crossing sequences

def build_map(curves, signs=None, punctures=()):
    """Build a cellular map from crossing sequences.

    ``curves`` is a sequence of ``(name, kind, vertices)``.  A closed curve
    visits its vertices cyclically (an empty list gives a free loop); an arc
    visits them between two dangling ends.  Every vertex must be visited by
    exactly two curves.  At a vertex where ``x`` (listed first) meets ``y``
    the rotation is ``(x_out, y_out, x_back, y_back)`` for sign ``+1`` and
    ``(x_out, y_back, x_back, y_out)`` for ``-1``.

    Each face becomes an unpunctured disc region, except that every dart in
    ``punctures`` places one puncture (anchored at that dart) in its face.
    The genus is whatever the Euler identity forces.
    """
    signs = signs or {}
    label = []
    at_vertex = {}
    fixed = []
    free = []

    def new_edge(name):
        label.append(name)
        return len(label) - 1

    for name, kind, verts in curves:
        verts = list(verts)
        if len(set(verts)) != len(verts):
            raise ValueError(f"curve {name!r} visits a vertex twice")
        if kind == CLOSED:
            if not verts:
                free.append(new_edge(name))
                continue
            k = len(verts)
            es = [new_edge(name) for _ in range(k)]
            for i, v in enumerate(verts):
                out_d = 2 * es[i]
                back_d = 2 * es[i - 1] + 1
                at_vertex.setdefault(v, []).append((name, out_d, back_d))
        elif kind == ARC:
            es = [new_edge(name) for _ in range(len(verts) + 1)]
            fixed.append(2 * es[0])
            fixed.append(2 * es[-1] + 1)
            for i, v in enumerate(verts):
                at_vertex.setdefault(v, []).append((name, 2 * es[i + 1], 2 * es[i] + 1))
        else:
            raise ValueError(f"unknown kind {kind!r}")

    n = 2 * len(label)
    sigma = [None] * n
    for d in fixed:
        sigma[d] = d
    for e in free:
        sigma[2 * e], sigma[2 * e + 1] = 2 * e + 1, 2 * e
    for v, visits in at_vertex.items():
        if len(visits) != 2:
            raise ValueError(f"vertex {v!r} is visited {len(visits)} times, expected 2")
        (_, xo, xb), (_, yo, yb) = visits
        s = signs.get(v, 1)
        order = (xo, yo, xb, yb) if s > 0 else (xo, yb, xb, yo)
        for i, d in enumerate(order):
            sigma[d] = order[(i + 1) % 4]
    kinds = tuple((name, kind) for name, kind, _ in curves)
    proto = CombMap(tuple(sigma), tuple(label), kinds, (), 0, 0)
    faces = proto.faces
    pcount = [0] * len(faces)
    anchors = [[] for _ in faces]
    for d in punctures:
        t = proto.face_of[d]
        pcount[t] += 1
        anchors[t].append(d)
    b = len(punctures)
    chi = len(proto.vertices) - len(label) + len(faces) - b
    twice_g = 2 - b - chi
    if twice_g < 0 or twice_g % 2:
        raise InconsistentMap(f"rotation system gives Euler characteristic {chi}")
    regions = tuple(Region(frozenset([t]), 0, pcount[t], tuple(anchors[t]))
                    for t in range(len(faces)))
    return CombMap(tuple(sigma), tuple(label), kinds, regions, twice_g // 2, b)


def insert_arc(M, edge, name):
    """Add an arc named ``name`` crossing ``edge`` once, with one dangling end
    in each of the two regions beside the edge."""
    if name in M.kinds:
        raise ValueError(f"curve {name!r} already exists")
    if not 0 <= edge < M.num_edges:
        raise ValueError(f"no edge {edge}")
    w = _Work(M)
    a, b = 2 * edge, 2 * edge + 1
    lab = w.label[a]
    ra, rb = w.region_of[a], w.region_of[b]
    a_rev, c = w.new_dart(), w.new_dart()
    s, s_end, m, m_end = (w.new_dart() for _ in range(4))
    # a: u -> X, a_rev: X -> u, c: X -> w, b: w -> X
    w.alpha.update({a: a_rev, a_rev: a, c: b, b: c, s: s_end, s_end: s, m: m_end, m_end: m})
    w.label.update({a_rev: lab, c: lab, s: name, s_end: name, m: name, m_end: name})
    w.region_of.update({a_rev: rb, c: ra, s: ra, s_end: ra, m: rb, m_end: rb})
    ring = (c, m, a_rev, s)
    for i, d in enumerate(ring):
        w.sigma[d] = ring[(i + 1) % 4]
        w.sinv[ring[(i + 1) % 4]] = d
    for d in (s_end, m_end):
        w.sigma[d] = d
        w.sinv[d] = d
    w.kinds[name] = ARC
    return w.to_map()
