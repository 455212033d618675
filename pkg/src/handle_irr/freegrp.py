"""Words and endomorphisms of a free group of small rank.

A word is a tuple of non-zero integers: ``k`` is the ``k``-th generator and
``-k`` its inverse.  In text, generators are ``a, b, c, ...`` and uppercase
letters are their inverses, so ``"aB"`` is ``(1, -2)``.
"""
import string
from dataclasses import dataclass
from fractions import Fraction


def _check(w, rank):
    for x in w:
        if x == 0 or (rank is not None and abs(x) > rank):
            raise ValueError(f"generator index {x} out of range for rank {rank}")


def reduce(w, rank=None):
    _check(w, rank)
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w, rank=None):
    w = list(reduce(w, rank))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def inverse(w):
    return tuple(-x for x in reversed(w))


def parse_word(text, rank=None):
    out = []
    for ch in text.strip():
        if ch in "1e":
            continue
        if ch.islower():
            out.append(string.ascii_lowercase.index(ch) + 1)
        elif ch.isupper():
            out.append(-(string.ascii_uppercase.index(ch) + 1))
        else:
            raise ValueError(f"bad letter {ch!r} in word {text!r}")
    return reduce(out, rank)


def format_word(w):
    if not w:
        return "1"
    return "".join(string.ascii_lowercase[x - 1] if x > 0 else string.ascii_uppercase[-x - 1]
                   for x in w)


@dataclass(frozen=True)
class EndoTable:
    rank: int
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise ValueError(f"rank {self.rank} table needs {self.rank} images, got {len(self.images)}")
        object.__setattr__(self, "images", tuple(reduce(w, self.rank) for w in self.images))

    def __call__(self, w):
        out = []
        for x in w:
            img = self.images[abs(x) - 1]
            out.extend(img if x > 0 else inverse(img))
        return reduce(out)

    def __str__(self):
        return "; ".join(f"{string.ascii_lowercase[i]}->{format_word(w)}"
                         for i, w in enumerate(self.images))


def identity(rank):
    return EndoTable(rank, tuple((i + 1,) for i in range(rank)))


def parse_table(text, rank=None):
    """Parse ``"a->ab; b->b"``; generators missing from the text are fixed."""
    pairs = {}
    for part in text.replace(",", ";").split(";"):
        part = part.strip()
        if not part:
            continue
        lhs, sep, rhs = part.partition("->")
        lhs = lhs.strip()
        if not sep or len(lhs) != 1 or not lhs.islower():
            raise ValueError(f"expected 'x->word', got {part!r}")
        k = string.ascii_lowercase.index(lhs) + 1
        if k in pairs:
            raise ValueError(f"generator {lhs!r} given twice")
        pairs[k] = parse_word(rhs)
    if rank is None:
        rank = max([k for k in pairs] + [abs(x) for w in pairs.values() for x in w] + [1])
    for k in pairs:
        if k > rank:
            raise ValueError(f"generator {string.ascii_lowercase[k - 1]!r} exceeds rank {rank}")
    return EndoTable(rank, tuple(pairs.get(i + 1, (i + 1,)) for i in range(rank)))


def compose(f, g):
    """``f o g``: apply ``g`` first."""
    if f.rank != g.rank:
        raise ValueError(f"rank mismatch: {f.rank} and {g.rank}")
    return EndoTable(f.rank, tuple(f(w) for w in g.images))


def is_identity(f):
    return all(w == (i + 1,) for i, w in enumerate(f.images))


def abelianization_matrix(f):
    """Integer matrix whose column ``j`` is the exponent-sum vector of the
    image of generator ``j``."""
    m = [[0] * f.rank for _ in range(f.rank)]
    for j, w in enumerate(f.images):
        for x in w:
            m[abs(x) - 1][j] += 1 if x > 0 else -1
    return m


def determinant(m):
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            k = a[r][c] / a[c][c]
            for j in range(c, n):
                a[r][j] -= k * a[c][j]
    return int(det)


class NotAutomorphismOnHomology(ValueError):
    pass


def anosov_check(m):
    """``True`` iff the 2x2 unimodular matrix ``m`` has ``|trace| > 2``."""
    if len(m) != 2 or any(len(row) != 2 for row in m):
        raise ValueError("anosov_check needs a 2x2 matrix")
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if det not in (1, -1):
        raise NotAutomorphismOnHomology(f"determinant {det} is not +-1")
    return abs(m[0][0] + m[1][1]) > 2


def nielsen_reduce(images):
    """Greedy Nielsen reduction of a tuple of words.

    Each round applies the move ``u_i -> u_i u_j^e`` or ``u_i -> u_j^e u_i``
    that shortens the total length most (ties broken by ``(i, j, e, side)``).
    Returns the final tuple and the list of moves made.
    """
    ws = [reduce(w) for w in images]
    log = []
    while True:
        total = sum(map(len, ws))
        best = None
        for i in range(len(ws)):
            for j in range(len(ws)):
                if i == j:
                    continue
                for e in (1, -1):
                    v = ws[j] if e > 0 else inverse(ws[j])
                    for side, cand in (("right", reduce(ws[i] + v)), ("left", reduce(v + ws[i]))):
                        gain = len(ws[i]) - len(cand)
                        if gain > 0 and (best is None or gain > best[0]):
                            best = (gain, i, j, e, side, cand)
        if best is None:
            return tuple(ws), log
        gain, i, j, e, side, cand = best
        ws[i] = cand
        log.append(f"u{i + 1} -> " + (f"u{i + 1} u{j + 1}^{e}" if side == "right"
                                       else f"u{j + 1}^{e} u{i + 1}")
                   + f"  (total length {total} -> {total - gain})")


def _is_basis_tuple(ws, rank):
    return (all(len(w) == 1 for w in ws)
            and sorted(abs(w[0]) for w in ws) == list(range(1, rank + 1)))


def generates_free_group(images, rank):
    """Stallings folding: do ``images`` generate the whole free group?"""
    parent = {}

    def find(v):
        while parent.setdefault(v, v) != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    edges = set()
    fresh = [1]
    for w in images:
        v = 0
        for k, x in enumerate(w):
            u = 0 if k == len(w) - 1 else fresh[0]
            if u:
                fresh[0] += 1
            edges.add((v, x, u) if x > 0 else (u, -x, v))
            v = u
    changed = True
    while changed:
        changed = False
        out = {}
        for s, lab, t in list(edges):
            s, t = find(s), find(t)
            for key, other in (((s, lab, "+"), t), ((t, lab, "-"), s)):
                if key in out and find(out[key]) != find(other):
                    parent[find(other)] = find(out[key])
                    changed = True
                out.setdefault(key, other)
        edges = {(find(s), lab, find(t)) for s, lab, t in edges}
    verts = {find(0)} | {find(s) for s, _, _ in edges} | {find(t) for _, _, t in edges}
    labels = {lab for s, lab, t in edges if s == t == find(0)}
    return len(verts) == 1 and labels == set(range(1, rank + 1))


def is_automorphism(f, log=None):
    """Decide whether ``f`` is an automorphism.

    Nielsen reduction is tried first; if it stalls before reaching a
    permutation of the generators and their inverses, the answer comes from
    folding (a surjective endomorphism of a free group is an automorphism).
    Moves are appended to ``log`` when one is given.
    """
    if determinant(abelianization_matrix(f)) not in (1, -1):
        if log is not None:
            log.append("abelianization determinant is not +-1")
        return False
    final, moves = nielsen_reduce(f.images)
    if log is not None:
        log.extend(moves)
    if _is_basis_tuple(final, f.rank):
        return True
    if any(not w for w in final):
        return False
    if log is not None:
        log.append("Nielsen reduction stalled; deciding by folding")
    return generates_free_group(final, f.rank)
