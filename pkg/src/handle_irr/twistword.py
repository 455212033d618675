"""Twist words and irreducibility certificates.

A word is written ``T<+|-><target>`` letter by letter, separated by
whitespace, and acts right to left.  Targets are

* ``A(c)``  the vertical annulus ``c x I`` of a curve ``c`` of ``S``;
* ``Δ``     (or ``Delta``) the disc cut out of ``S x I`` by the dual arc;
* ``C(c)``  a curve ``c`` on a closed surface (the boundary of ``H``).
"""
import json
import re
from dataclasses import dataclass

from .bounds import reducing_surface_window
from .doubling import InternalConsistencyError, build_QR, copy_name
from .penner import check_penner_pair, validate_dual_arc
from .surfmap import MapError

ANNULUS, DISC_TARGET, CURVE = "annulus", "disc", "curve"

COMPUTED, THEOREM, ASSERTED = "computed", "theorem", "user-asserted"

CERTIFIED = "irreducible-certified"
CONDITIONAL = "conditional-certificate"
REJECTED = "rejected"


class WordSyntaxError(MapError):
    pass


@dataclass(frozen=True)
class TwistLetter:
    kind: str
    curve: str
    sign: int

    def __str__(self):
        s = "+" if self.sign > 0 else "-"
        if self.kind == DISC_TARGET:
            return f"T{s}Δ"
        return f"T{s}{'A' if self.kind == ANNULUS else 'C'}({self.curve})"


@dataclass(frozen=True)
class TwistWord:
    letters: tuple

    def __post_init__(self):
        if not self.letters:
            raise WordSyntaxError("a twist word needs at least one letter")

    def __str__(self):
        return " ".join(map(str, self.letters))

    def __iter__(self):
        return iter(self.letters)


_LETTER = re.compile(r"^T([+-])(?:(A|C)\(([A-Za-z_][\w.\-']*)\)|(Δ|Delta))$")


def parse_word(text):
    letters = []
    for i, tok in enumerate(text.split()):
        m = _LETTER.match(tok)
        if not m:
            raise WordSyntaxError(f"letter {i + 1}: cannot parse {tok!r}")
        sign = 1 if m.group(1) == "+" else -1
        if m.group(4):
            letters.append(TwistLetter(DISC_TARGET, None, sign))
        else:
            kind = ANNULUS if m.group(2) == "A" else CURVE
            letters.append(TwistLetter(kind, m.group(3), sign))
    return TwistWord(tuple(letters))


def _as_word(w):
    return parse_word(w) if isinstance(w, str) else w


def validate_method_word(w, C, D):
    """Violations of the twist-word hypotheses, as ``(condition, message)``.

    (a) all annuli over ``D`` twist with one sign ``s``; (b) annuli over ``C``
    and the disc twist with ``-s``; (c) every annulus and the disc occur.
    """
    w = _as_word(w)
    C, D = set(C), set(D)
    out = []
    for x in w:
        if x.kind == CURVE:
            out.append(("target", f"{x} twists a surface curve, not an annulus or the disc"))
        elif x.kind == ANNULUS and x.curve not in C | D:
            out.append(("target", f"{x} twists an annulus over a curve outside C and D"))
    d_signs = {x.sign for x in w if x.kind == ANNULUS and x.curve in D}
    c_signs = {x.sign for x in w if (x.kind == ANNULUS and x.curve in C) or x.kind == DISC_TARGET}
    if len(d_signs) > 1:
        out.append(("a", "annuli over D twist in both directions"))
    if len(c_signs) > 1:
        out.append(("b", "annuli over C and the disc do not share one direction"))
    if d_signs & c_signs:
        out.append(("b", "a D annulus and a C annulus or the disc twist in the same direction"))
    seen = {x.curve for x in w if x.kind == ANNULUS}
    for c in sorted(C | D):
        if c not in seen:
            out.append(("c", f"annulus over {c} does not appear at least once"))
    if not any(x.kind == DISC_TARGET for x in w):
        out.append(("c", "the disc twist does not appear at least once"))
    return out


def boundary_restriction(w, DM):
    """The word on the boundary surface: an annulus twist ``(c, s)`` becomes
    ``(c.1, s)`` and ``(c.0, -s)``; the disc twist keeps its sign on the disc
    boundary curve."""
    w = _as_word(w)
    out = []
    for x in w:
        if x.kind == ANNULUS:
            if x.curve not in DM.mirror:
                raise MapError(f"{x}: curve {x.curve!r} is not a curve of the doubled surface's source")
            out.append(TwistLetter(CURVE, copy_name(x.curve, 1), x.sign))
            out.append(TwistLetter(CURVE, copy_name(x.curve, 0), -x.sign))
        elif x.kind == DISC_TARGET:
            if DM.disc is None:
                raise MapError("the doubled surface carries no disc boundary")
            out.append(TwistLetter(CURVE, DM.disc, x.sign))
        else:
            raise MapError(f"{x} is already a surface twist")
    return TwistWord(tuple(out))


def subordination(w, Q, R):
    """Problems keeping ``w`` from being a product of twists of one sign
    along ``Q`` and the opposite sign along ``R``, each curve used."""
    w = _as_word(w)
    Q, R = set(Q), set(R)
    out = []
    q_signs, r_signs = set(), set()
    for x in w:
        if x.kind != CURVE:
            out.append(f"{x} is not a surface twist")
        elif x.curve in Q:
            q_signs.add(x.sign)
        elif x.curve in R:
            r_signs.add(x.sign)
        else:
            out.append(f"{x} twists a curve outside Q and R")
    if len(q_signs) > 1 or len(r_signs) > 1 or q_signs & r_signs:
        out.append("twists along Q and R are not of opposite constant signs")
    used = {x.curve for x in w}
    missing = sorted((Q | R) - used)
    if missing:
        out.append(f"curves {missing} are never twisted")
    return out


@dataclass(frozen=True)
class Step:
    n: int
    tag: str
    passed: bool
    description: str

    def line(self):
        return f"step {self.n} {self.tag} {'pass' if self.passed else 'fail'} {self.description}"


@dataclass(frozen=True)
class Certificate:
    verdict: str
    steps: tuple
    reason: str = ""

    @property
    def ok(self):
        return self.verdict in (CERTIFIED, CONDITIONAL)

    def text(self):
        lines = [s.line() for s in self.steps]
        lines.append(f"verdict {self.verdict}" + (f": {self.reason}" if self.reason else ""))
        return "\n".join(lines) + "\n"

    def to_json(self):
        doc = {
            "format": 1,
            "verdict": self.verdict,
            "reason": self.reason,
            "steps": [{"n": s.n, "tag": s.tag, "status": "pass" if s.passed else "fail",
                       "description": s.description} for s in self.steps],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


class _Recorder:
    def __init__(self):
        self.steps = []

    def add(self, tag, passed, description):
        self.steps.append(Step(len(self.steps) + 1, tag, passed, description))
        return passed

    def reject(self, reason):
        return Certificate(REJECTED, tuple(self.steps), reason)

    def finish(self):
        if any(s.tag == ASSERTED for s in self.steps):
            return Certificate(CONDITIONAL, tuple(self.steps),
                               "holds provided the user-asserted steps are true")
        return Certificate(CERTIFIED, tuple(self.steps))


def _names(xs):
    return "{" + ", ".join(sorted(xs)) + "}"


def certify_irreducible(M, C, D, theta, w):
    """Certify that the twist word ``w`` on ``S x I`` is irreducible.

    Steps 1-5 are checked here; steps 6 and 7 cite the theorems that turn
    them into irreducibility.  The first failing step ends the certificate.
    """
    rec = _Recorder()
    try:
        w = _as_word(w)
    except WordSyntaxError as exc:
        rec.add(COMPUTED, False, f"word parses: {exc}")
        return rec.reject("step 1 failed")
    try:
        pair = check_penner_pair(M, C, D)
        ok, detail = pair.passed, ", ".join(pair.failed()) or "all four conditions hold"
    except MapError as exc:
        ok, detail = False, str(exc)
    if not rec.add(COMPUTED, ok, f"(C, D) = ({_names(C)}, {_names(D)}) is a Penner pair on S: {detail}"):
        return rec.reject("step 1 failed")
    try:
        dual = validate_dual_arc(M, theta, C, D)
        ok = True
        detail = f"{theta} crosses {dual.crossed_curve} once and is essential"
    except MapError as exc:
        ok, detail = False, str(exc)
    if not rec.add(COMPUTED, ok, f"{theta} is a dual arc: {detail}"):
        return rec.reject("step 2 failed")
    Ce, De = frozenset(C), frozenset(D)
    if dual.crossed_system == "D":
        Ce, De = De, Ce
    if not rec.add(COMPUTED, M.boundary == 1, f"S has one boundary circle (b = {M.boundary})"):
        return rec.reject("step 3 failed")
    try:
        DM, qr, report = build_QR(M, C, D, theta)
        ok = True
        detail = f"Q = {_names(qr.Q)}, R = {_names(qr.R)}, genus {DM.map.genus}"
    except (MapError, InternalConsistencyError) as exc:
        ok, detail = False, str(exc)
    if not rec.add(COMPUTED, ok, f"(Q, R) is a Penner pair on the boundary of H: {detail}"):
        return rec.reject("step 4 failed")
    bad = validate_method_word(w, Ce, De)
    roles = f"C = {_names(Ce)}, D = {_names(De)}"
    if dual.crossed_system == "D":
        roles += " (roles swapped so that C holds the crossed curve)"
    detail = "; ".join(f"({k}) {m}" for k, m in bad) if bad else "signs and coverage hold"
    if not rec.add(COMPUTED, not bad, f"{w} twists D one way, C and the disc the other, "
                                      f"each at least once, {roles}: {detail}"):
        kinds = sorted({k for k, _ in bad})
        what = "coverage" if kinds == ["c"] else "sign partition" if "c" not in kinds else "signs and coverage"
        return rec.reject(f"step 5 failed ({what})")
    bw = boundary_restriction(w, DM)
    bad = subordination(bw, qr.Q, qr.R)
    if not rec.add(THEOREM, not bad,
                   f"boundary word {bw} is a Penner product for (Q, R), so the boundary map is "
                   f"pseudo-Anosov [Penner's theorem]" + (": " + "; ".join(bad) if bad else "")):
        return rec.reject("step 6 failed")
    rec.add(THEOREM, True,
            "disc twists act trivially on pi_1(H), so f_* equals the action of a Penner map of S, "
            "whose powers are all irreducible; hence H has no closed reducing surface")
    return rec.finish()


def certify_genus2(M, C, D, w, disc_curves=None):
    """Certify a word of twists on the closed genus-2 boundary of ``H``.

    Whether each twisted curve bounds a disc in ``H`` cannot be checked from
    the surface alone, so those facts are recorded as user assertions.
    """
    rec = _Recorder()
    w = _as_word(w)
    closed = M.boundary == 0
    if not (closed and M.genus == 2):
        win = reducing_surface_window(M.genus) if M.genus >= 1 else None
        detail = win.summary() if win else "no window"
        rec.add(COMPUTED, False, f"boundary surface is closed of genus 2 (genus {M.genus}, "
                                 f"b = {M.boundary}); reducing-surface window: {detail}")
        return rec.reject("step 1 failed: genus is not 2")
    rec.add(COMPUTED, True, "boundary surface is closed of genus 2")
    try:
        pair = check_penner_pair(M, C, D)
        ok, detail = pair.passed, ", ".join(pair.failed()) or "all four conditions hold"
    except MapError as exc:
        ok, detail = False, str(exc)
    if not rec.add(COMPUTED, ok, f"(C, D) = ({_names(C)}, {_names(D)}) is a Penner pair: {detail}"):
        return rec.reject("step 2 failed")
    bad = subordination(w, C, D)
    if not rec.add(COMPUTED, not bad, f"{w} twists C one way and D the other, each at least once"
                                      + (": " + "; ".join(bad) if bad else "")):
        return rec.reject("step 3 failed (Penner subordination)")
    rec.add(THEOREM, True, "the boundary map is pseudo-Anosov [Penner's theorem]")
    rec.add(THEOREM, True, "in genus 2 the reducing-surface window is empty, so f is irreducible "
                           "once it is an automorphism of H")
    curves = sorted({x.curve for x in w}) if disc_curves is None else sorted(disc_curves)
    for c in curves:
        rec.add(ASSERTED, True, f"{c} bounds a disc in H, so its twist extends over H")
    return rec.finish()

