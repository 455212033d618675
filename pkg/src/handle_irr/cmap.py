"""Reading and writing the line-oriented ``.cmap`` text format.

::

    surface g=1 b=1
    edges 2
    sigma (0 2 1 3)
    curve a0 closed : 0
    curve a1 closed : 1
    region 0 traces=0 genus=0 punctures=1 anchors=0

``#`` starts a comment.  Parsing is strict: unknown keys, duplicate darts,
missing declarations and traces without a region are errors carrying the
offending line number.
"""
import re

from .surfmap import ARC, CLOSED, CombMap, MapError, Region, trace_faces


class CmapSyntaxError(MapError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


_NAME = re.compile(r"^[A-Za-z_][\w.\-']*$")


def dumps(M, comments=()):
    lines = [f"# {c}" for c in comments]
    lines.append(f"surface g={M.genus} b={M.boundary}")
    lines.append(f"edges {M.num_edges}")
    cycles = "".join("(" + " ".join(map(str, v)) + ")" for v in M.vertices)
    lines.append(f"sigma {cycles}".rstrip())
    for name, kind in M.curves:
        edges = " ".join(map(str, M.edges_of(name)))
        lines.append(f"curve {name} {kind} : {edges}")
    for r, reg in enumerate(M.regions):
        traces = ",".join(map(str, sorted(reg.traces)))
        anchors = ",".join(map(str, reg.anchors))
        lines.append(f"region {r} traces={traces} genus={reg.genus} "
                     f"punctures={reg.punctures} anchors={anchors}")
    return "\n".join(lines) + "\n"


def _ints(lineno, text, sep=","):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(sep, " ").split()]
    except ValueError:
        raise CmapSyntaxError(lineno, f"expected integers, got {text!r}") from None


def _keyvals(lineno, tokens, allowed):
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise CmapSyntaxError(lineno, f"expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        if k not in allowed:
            raise CmapSyntaxError(lineno, f"unknown key {k!r}")
        if k in out:
            raise CmapSyntaxError(lineno, f"duplicate key {k!r}")
        out[k] = v
    missing = [k for k in allowed if k not in out]
    if missing:
        raise CmapSyntaxError(lineno, f"missing keys {missing}")
    return out


def loads(text):
    """Parse ``.cmap`` text into a :class:`CombMap` (semantic checks are left
    to :func:`validate_map`)."""
    surface = edges = sigma = None
    curves = []
    labels = {}
    regions = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last = lineno
        head, _, rest = line.partition(" ")
        if head == "surface":
            if surface is not None:
                raise CmapSyntaxError(lineno, "duplicate surface declaration")
            kv = _keyvals(lineno, rest.split(), ("g", "b"))
            g, b = _ints(lineno, kv["g"]), _ints(lineno, kv["b"])
            if len(g) != 1 or len(b) != 1 or g[0] < 0 or b[0] < 0:
                raise CmapSyntaxError(lineno, "g and b must be non-negative integers")
            surface = (g[0], b[0])
        elif head == "edges":
            if edges is not None:
                raise CmapSyntaxError(lineno, "duplicate edges declaration")
            vals = _ints(lineno, rest, " ")
            if len(vals) != 1 or vals[0] < 0:
                raise CmapSyntaxError(lineno, "edges takes one non-negative integer")
            edges = vals[0]
        elif head == "sigma":
            if edges is None:
                raise CmapSyntaxError(lineno, "sigma before edges")
            if sigma is not None:
                raise CmapSyntaxError(lineno, "duplicate sigma declaration")
            sigma = [None] * (2 * edges)
            for cyc in re.findall(r"\(([^()]*)\)", rest):
                darts = _ints(lineno, cyc, " ")
                if not darts:
                    raise CmapSyntaxError(lineno, "empty cycle")
                for i, d in enumerate(darts):
                    if not 0 <= d < 2 * edges:
                        raise CmapSyntaxError(lineno, f"dart {d} out of range")
                    if sigma[d] is not None:
                        raise CmapSyntaxError(lineno, f"duplicate dart {d}")
                    sigma[d] = darts[(i + 1) % len(darts)]
            leftover = re.sub(r"\([^()]*\)", "", rest).strip()
            if leftover:
                raise CmapSyntaxError(lineno, f"unexpected text in sigma: {leftover!r}")
            missing = [d for d, s in enumerate(sigma) if s is None]
            if missing:
                raise CmapSyntaxError(lineno, f"sigma misses darts {missing}")
        elif head == "curve":
            if edges is None:
                raise CmapSyntaxError(lineno, "curve before edges")
            left, sep, right = rest.partition(":")
            parts = left.split()
            if not sep or len(parts) != 2:
                raise CmapSyntaxError(lineno, "expected 'curve <name> closed|arc : <edges>'")
            name, kind = parts
            if not _NAME.match(name):
                raise CmapSyntaxError(lineno, f"bad curve name {name!r}")
            if kind not in (CLOSED, ARC):
                raise CmapSyntaxError(lineno, f"unknown curve kind {kind!r}")
            if any(name == c for c, _ in curves):
                raise CmapSyntaxError(lineno, f"duplicate curve {name!r}")
            for e in _ints(lineno, right, " "):
                if not 0 <= e < edges:
                    raise CmapSyntaxError(lineno, f"edge {e} out of range")
                if e in labels:
                    raise CmapSyntaxError(lineno, f"edge {e} already belongs to {labels[e]!r}")
                labels[e] = name
            curves.append((name, kind))
        elif head == "region":
            idx, _, kvtext = rest.partition(" ")
            if _ints(lineno, idx) != [len(regions)]:
                raise CmapSyntaxError(lineno, f"expected region {len(regions)}")
            kv = _keyvals(lineno, kvtext.split(), ("traces", "genus", "punctures", "anchors"))
            traces = _ints(lineno, kv["traces"])
            genus = _ints(lineno, kv["genus"])
            punct = _ints(lineno, kv["punctures"])
            if len(genus) != 1 or len(punct) != 1:
                raise CmapSyntaxError(lineno, "genus and punctures take one integer")
            if len(set(traces)) != len(traces):
                raise CmapSyntaxError(lineno, "duplicate trace")
            regions.append((lineno, Region(frozenset(traces), genus[0], punct[0],
                                           tuple(_ints(lineno, kv["anchors"])))))
        else:
            raise CmapSyntaxError(lineno, f"unknown declaration {head!r}")

    if surface is None or edges is None or sigma is None:
        raise CmapSyntaxError(last, "surface, edges and sigma must all be declared")
    unlabelled = [e for e in range(edges) if e not in labels]
    if unlabelled:
        raise CmapSyntaxError(last, f"edges {unlabelled} belong to no curve")
    M = CombMap(tuple(sigma), tuple(labels[e] for e in range(edges)), tuple(curves),
                tuple(r for _, r in regions), surface[0], surface[1])
    owned = set()
    for lineno, r in regions:
        for t in r.traces:
            if t in owned:
                raise CmapSyntaxError(lineno, f"trace {t} listed twice")
            owned.add(t)
    nfaces = len(trace_faces(M))
    missing = [t for t in range(nfaces) if t not in owned]
    if missing:
        raise CmapSyntaxError(last, f"missing region for traces {missing}")
    extra = [t for t in owned if t >= nfaces]
    if extra:
        raise CmapSyntaxError(last, f"regions list unknown traces {sorted(extra)}")
    if not regions:
        raise CmapSyntaxError(last, "missing regions")
    return M


def comment_lines(text):
    """The bodies of ``#`` comment lines, in order."""
    out = []
    for raw in text.splitlines():
        s = raw.strip()
        if s.startswith("#"):
            out.append(s[1:].strip())
    return out
