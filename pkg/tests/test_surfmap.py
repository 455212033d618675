import random
from dataclasses import replace

import pytest

from handle_irr import fixtures
from handle_irr.doubling import double_surface
from handle_irr.surfmap import (
    ARC, BOUNDARY_PARALLEL, BOUNDS_DISC, ESSENTIAL, AmbiguousEmbedding, CombMap, InconsistentMap,
    UnknownCurve, WrongKind, _Work, arc_essential, are_parallel, bigon_faces, build_map,
    crossing_count, curve_components, delete_components, euler_characteristic, insert_arc,
    is_essential, is_isomorphic, mirror, relabel, trace_faces, validate_map,
)

from helpers import random_map


@pytest.fixture
def torus():
    return fixtures.torus()


@pytest.fixture
def octagon():
    return fixtures.octagon()


def with_isolated_arc(M, region, name="t"):
    """An arc crossing nothing, both ends on the puncture of ``region``."""
    w = _Work(M)
    x, y = w.new_dart(), w.new_dart()
    w.sigma.update({x: x, y: y})
    w.sinv.update({x: x, y: y})
    w.alpha.update({x: y, y: x})
    w.label.update({x: name, y: name})
    w.region_of.update({x: region, y: region})
    w.kinds[name] = ARC
    w.recompute_genus(region)
    return w.to_map()


# validate_map

def test_torus_is_valid(torus):
    assert validate_map(torus) == []
    assert torus.sigma == (2, 3, 1, 0)
    assert torus.genus == 1 and torus.boundary == 1


def test_every_fixture_is_valid():
    for fx in fixtures.FIXTURES.values():
        assert validate_map(fx.map) == [], fx.name


def test_broken_sigma_is_reported(torus):
    bad = replace(torus, sigma=(2, 3, 1, 2))
    assert any("sigma not a bijection" in v for v in validate_map(bad))


def test_degree_three_vertex_is_reported(torus):
    # merge the vertex into a 3-cycle plus a fixed point
    bad = replace(torus, sigma=(2, 0, 1, 3))
    problems = validate_map(bad)
    assert any("not in {1,4}" in v for v in problems)


def test_euler_mismatch_is_reported(torus):
    bad = replace(torus, genus=2)
    assert any("Euler identity" in v for v in validate_map(bad))
    with pytest.raises(InconsistentMap):
        euler_characteristic(bad)


def test_missing_puncture_owner_is_reported(torus):
    bad = replace(torus, boundary=2)
    assert validate_map(bad)


# faces and Euler characteristic

def test_torus_faces(torus):
    assert trace_faces(torus) == [(0, 3, 1, 2)]


def test_euler_characteristics(torus, octagon):
    assert euler_characteristic(torus) == -1
    assert euler_characteristic(double_surface(torus).map) == -2
    assert euler_characteristic(octagon) == -3
    assert euler_characteristic(double_surface(octagon).map) == -6


# curves

def test_torus_components(torus):
    comps = curve_components(torus)
    assert {c: {d >> 1 for d in w} for c, w in comps.items()} == {"a0": {0}, "a1": {1}}


def test_octagon_components(octagon):
    kinds = dict(octagon.curves)
    assert sorted(c for c in kinds if kinds[c] == "closed") == ["alpha", "beta", "delta", "gamma"]
    assert [c for c in kinds if kinds[c] == ARC] == ["theta"]
    assert set(curve_components(octagon)) == set(kinds)


def test_crossing_counts(torus, octagon):
    assert crossing_count(torus, "a0", "a1") == 1
    # homology pairing of (1, 0) and (0, 1)
    assert crossing_count(torus, "a0", "a1") == abs(1 * 1 - 0 * 0)
    assert crossing_count(octagon, "theta", "beta") == 1
    assert crossing_count(octagon, "theta", "alpha") == 0
    with pytest.raises(UnknownCurve):
        crossing_count(torus, "a0", "zz")


def test_bigons(torus):
    assert bigon_faces(torus) == []
    assert len(bigon_faces(fixtures.bigon_torus())) == 2


# deletion

def test_delete_on_torus(torus):
    A = delete_components(torus, ["a0"])
    assert validate_map(A) == []
    assert len(A.regions) == 1
    reg = A.regions[0]
    assert (reg.genus, len(reg.traces), reg.punctures) == (0, 2, 1)
    assert reg.euler_characteristic == -1


def test_delete_on_octagon(octagon):
    N = delete_components(octagon, ["beta", "theta"])
    assert validate_map(N) == []
    assert sum(r.euler_characteristic for r in N.regions) == -3
    assert sum(r.punctures for r in N.regions) == 1


def test_delete_everything_leaves_the_surface(torus):
    E = delete_components(torus, [])
    assert validate_map(E) == []
    assert E.num_darts == 0
    assert (E.regions[0].genus, E.regions[0].punctures) == (1, 1)


# essentiality and parallelism

def test_essential_curves(torus):
    assert is_essential(torus, "a0") == ESSENTIAL
    assert is_essential(torus, "a1") == ESSENTIAL


def test_loop_bounding_a_disc(torus):
    M = fixtures.with_free_loop(torus, 0, "z")
    assert validate_map(M) == []
    assert is_essential(M, "z") == BOUNDS_DISC


def test_loop_around_the_boundary(torus):
    M = fixtures.with_free_loop(torus, 0, "z", puncture=True)
    assert validate_map(M) == []
    assert is_essential(M, "z") == BOUNDARY_PARALLEL


def test_arc_essentiality(octagon, torus):
    assert arc_essential(octagon, "theta") is True
    assert arc_essential(fixtures.torus_with_arc(), "theta") is True
    assert arc_essential(fixtures.twice_punctured_annulus_arc(), "t") is True
    M = with_isolated_arc(torus, 0)
    assert validate_map(M) == []
    assert arc_essential(M, "t") is False
    with pytest.raises(WrongKind):
        arc_essential(torus, "a0")
    with pytest.raises(WrongKind):
        is_essential(octagon, "theta")


def test_arc_on_higher_genus_region_is_ambiguous():
    E = delete_components(fixtures.torus(), [])
    w = _Work(E)
    x, y = w.new_dart(), w.new_dart()
    w.sigma.update({x: x, y: y})
    w.sinv.update({x: x, y: y})
    w.alpha.update({x: y, y: x})
    w.label.update({x: "t", y: "t"})
    w.region_of.update({x: 0, y: 0})
    w.kinds["t"] = ARC
    w.empty_region = None
    w.regions[0][2] = [x]
    w.recompute_genus(0)
    M = w.to_map()
    assert validate_map(M) == []
    with pytest.raises(AmbiguousEmbedding):
        arc_essential(M, "t")


def test_parallel(torus, octagon):
    assert are_parallel(torus, "a0", "a1") is False
    assert are_parallel(fixtures.parallel_torus(), "a0", "a0p") is True
    assert are_parallel(fixtures.parallel_torus(keep_a1=True), "a0", "a0p") is True
    assert are_parallel(octagon, "beta", "delta") is False
    assert are_parallel(octagon, "alpha", "gamma") is False


# construction helpers

def test_build_map_rejects_bad_input():
    with pytest.raises(ValueError):
        build_map([("a", "closed", ["X", "X"])])
    with pytest.raises(ValueError):
        build_map([("a", "closed", ["X"])])
    with pytest.raises(ValueError):
        build_map([("a", "spiral", ["X"])])


def test_insert_arc(torus):
    M = insert_arc(torus, 0, "t")
    assert validate_map(M) == []
    assert crossing_count(M, "t", "a0") == 1
    assert crossing_count(M, "t", "a1") == 0
    with pytest.raises(ValueError):
        insert_arc(torus, 0, "a1")
    with pytest.raises(ValueError):
        insert_arc(torus, 5, "t")


def test_mirror_and_isomorphism(octagon):
    m = mirror(octagon)
    assert validate_map(m) == []
    assert is_isomorphic(mirror(m), octagon)
    assert not is_isomorphic(fixtures.torus(), fixtures.bigon_torus())


def test_relabel_is_isomorphic(octagon):
    rng = random.Random(3)
    edges = list(range(octagon.num_edges))
    rng.shuffle(edges)
    perm = {}
    for e, f in enumerate(edges):
        flip = rng.random() < 0.5
        perm[2 * e], perm[2 * e + 1] = (2 * f + 1, 2 * f) if flip else (2 * f, 2 * f + 1)
    R = relabel(octagon, perm)
    assert validate_map(R) == []
    assert is_isomorphic(R, octagon)


def test_combmap_is_frozen(torus):
    with pytest.raises(Exception):
        torus.genus = 3
    assert isinstance(torus, CombMap)


# randomized properties

SEED = 20240611
CASES = 150


def test_faces_partition_darts_random():
    rng = random.Random(SEED)
    for _ in range(CASES):
        M = random_map(rng)
        darts = sorted(d for f in trace_faces(M) for d in f)
        assert darts == list(range(M.num_darts))


def test_euler_matches_signature_random():
    rng = random.Random(SEED + 1)
    for _ in range(CASES):
        M = random_map(rng)
        assert euler_characteristic(M) == 2 - 2 * M.genus - M.boundary


def test_delete_components_random():
    rng = random.Random(SEED + 2)
    for _ in range(CASES):
        M = random_map(rng)
        names = [c for c, _ in M.curves]
        keep = rng.sample(names, rng.randint(0, len(names)))
        N = delete_components(M, keep)
        assert validate_map(N) == []
        assert euler_characteristic(N) == euler_characteristic(M)
        assert sum(r.punctures for r in N.regions) == M.boundary


def test_crossing_count_symmetric_random():
    rng = random.Random(SEED + 3)
    for _ in range(CASES):
        M = random_map(rng)
        names = [c for c, _ in M.curves]
        x, y = rng.sample(names, 2)
        assert crossing_count(M, x, y) == crossing_count(M, y, x)


def test_mirror_random():
    rng = random.Random(SEED + 4)
    for _ in range(CASES):
        M = random_map(rng)
        m = mirror(M)
        assert validate_map(m) == []
        assert is_isomorphic(mirror(m), M)
