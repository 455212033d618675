"""Random curve systems for property tests."""
from handle_irr.surfmap import CLOSED, build_map


def _connected(visits, m):
    adj = {c: set() for c in range(m)}
    owner = {}
    for c, vs in visits.items():
        for v in vs:
            owner.setdefault(v, []).append(c)
    for a, b in owner.values():
        adj[a].add(b)
        adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        for y in adj[stack.pop()] - seen:
            seen.add(y)
            stack.append(y)
    return len(seen) == m


def random_map(rng, max_curves=4, max_vertices=7, max_punctures=2):
    """A connected system of closed curves with random crossings, rotation
    signs and punctures."""
    while True:
        m = rng.randint(2, max_curves)
        n = rng.randint(m - 1, max_vertices)
        visits = {c: [] for c in range(m)}
        for v in range(n):
            x, y = rng.sample(range(m), 2)
            visits[x].append(v)
            visits[y].append(v)
        if all(visits.values()) and _connected(visits, m):
            break
    for vs in visits.values():
        rng.shuffle(vs)
    curves = [(f"c{c}", CLOSED, visits[c]) for c in range(m)]
    signs = {v: rng.choice((1, -1)) for v in range(n)}
    proto = build_map(curves, signs)
    punct = [rng.randrange(proto.num_darts) for _ in range(rng.randint(0, max_punctures))]
    return build_map(curves, signs, punct)
