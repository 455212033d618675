import pytest

from handle_irr import fixtures
from handle_irr.penner import (
    EFFICIENT, FILLING, NO_PARALLEL, SYSTEMS, DualArcRejected, MalformedPartition,
    PennerHypothesisError, check_penner_pair, closed_part, find_dual_arcs, infer_systems,
    materialize, validate_dual_arc,
)
from handle_irr.surfmap import UnknownCurve, build_map, crossing_count, insert_arc, validate_map


def test_torus_pair():
    pair = check_penner_pair(fixtures.torus(), ["a0"], ["a1"])
    assert pair.passed and pair.failed() == []
    assert pair.lines()[0] == "systems: pass"


def test_octagon_pair():
    assert check_penner_pair(fixtures.octagon(), ["beta", "delta"], ["alpha", "gamma"]).passed


def test_closed_genus2_pair():
    assert check_penner_pair(fixtures.genus2_closed(), ["C0"], ["C1"]).passed
    assert check_penner_pair(fixtures.genus3_closed(), ["C0"], ["C1"]).passed


def test_bigon_fails_only_efficiency():
    pair = check_penner_pair(fixtures.bigon_torus(), ["a0"], ["a1"])
    assert pair.failed() == [EFFICIENT]


def test_parallel_duplicate_fails_only_no_parallel():
    pair = check_penner_pair(fixtures.parallel_torus(keep_a1=True), ["a0", "a0p"], ["a1"])
    assert pair.failed() == [NO_PARALLEL]


def test_disjoint_copy_instead_of_second_curve():
    pair = check_penner_pair(fixtures.parallel_torus(), ["a0"], ["a0p"])
    assert pair.failed() == [NO_PARALLEL, FILLING]


def test_crossing_within_a_system():
    pair = check_penner_pair(fixtures.octagon(), ["alpha", "beta"], ["gamma", "delta"])
    assert SYSTEMS in pair.failed()


def test_inessential_curve_fails_systems():
    M = fixtures.with_free_loop(fixtures.torus(), 0, "z")
    pair = check_penner_pair(M, ["a0", "z"], ["a1"])
    assert SYSTEMS in pair.failed()
    M = fixtures.with_free_loop(fixtures.torus(), 0, "z", puncture=True)
    pair = check_penner_pair(M, ["a0", "z"], ["a1"])
    assert SYSTEMS in pair.failed()


def test_partition_errors():
    T = fixtures.torus()
    with pytest.raises(MalformedPartition):
        check_penner_pair(T, ["a0"], ["a0", "a1"])
    with pytest.raises(MalformedPartition):
        check_penner_pair(T, ["a0"], [])
    with pytest.raises(UnknownCurve):
        check_penner_pair(T, ["a0"], ["b"])
    with pytest.raises(MalformedPartition):
        check_penner_pair(fixtures.octagon(), ["beta", "delta", "theta"], ["alpha", "gamma"])


def test_nonnegative_euler_characteristic():
    annulus = build_map([("c", "closed", ["X"]), ("t", "arc", ["X"])], punctures=[2, 5])
    with pytest.raises(PennerHypothesisError):
        check_penner_pair(annulus, ["c"], [])


def test_dual_arc_octagon():
    dual = validate_dual_arc(fixtures.octagon(), "theta", ["beta", "delta"], ["alpha", "gamma"])
    assert (dual.crossed_curve, dual.crossed_system) == ("beta", "C")


def test_dual_arc_torus():
    M = insert_arc(fixtures.torus(), 0, "t")
    dual = validate_dual_arc(M, "t", ["a0"], ["a1"])
    assert (dual.crossed_curve, dual.crossed_system) == ("a0", "C")
    dual = validate_dual_arc(fixtures.torus_with_arc(), "theta", ["a0"], ["a1"])
    assert dual.crossed_system == "D"


def test_dual_arc_rejections():
    O = fixtures.octagon()
    with pytest.raises(DualArcRejected) as err:
        validate_dual_arc(O, "beta", ["beta", "delta"], ["alpha", "gamma"])
    assert err.value.reason == "closed"
    # t crosses both a0 and a1; its first end dart is 8
    M = build_map([("a0", "closed", ["X", "P"]), ("a1", "closed", ["X", "Q"]),
                   ("t", "arc", ["P", "Q"])], punctures=[8])
    assert validate_map(M) == []
    with pytest.raises(DualArcRejected) as err:
        validate_dual_arc(M, "t", ["a0"], ["a1"])
    assert err.value.reason == "crossings"
    with pytest.raises(UnknownCurve):
        validate_dual_arc(O, "nope", ["beta", "delta"], ["alpha", "gamma"])


def test_find_dual_arcs_torus():
    found = find_dual_arcs(fixtures.torus(), ["a0"], ["a1"])
    assert [p.curve for p in found] == ["a0", "a1"]
    assert found[0].line() == "edge=0 regions=0,0 punctures=0,0"


def test_find_dual_arcs_octagon_contains_theta():
    O = fixtures.octagon()
    found = find_dual_arcs(O, ["beta", "delta"], ["alpha", "gamma"])
    assert "beta" in {p.curve for p in found}
    theta_like = [p for p in found if p.curve == "beta"]
    for p in theta_like:
        M = materialize(O, p)
        assert validate_map(M) == []
        assert crossing_count(M, "theta", "beta") == 1
        assert validate_dual_arc(M, "theta", ["beta", "delta"], ["alpha", "gamma"]).crossed_curve == "beta"


def test_closed_genus_has_no_dual_arcs():
    assert find_dual_arcs(fixtures.genus2_closed(), ["C0"], ["C1"]) == []


def test_materialized_arc_passes():
    T = fixtures.torus()
    for p in find_dual_arcs(T, ["a0"], ["a1"]):
        M = materialize(T, p)
        assert validate_dual_arc(M, "theta", ["a0"], ["a1"]).crossed_curve == p.curve


def test_infer_systems():
    O = fixtures.octagon()
    assert infer_systems(O, "theta") == ({"beta", "delta"}, {"alpha", "gamma"})
    a, b = infer_systems(closed_part(fixtures.torus_with_arc()))
    assert {frozenset(a), frozenset(b)} == {frozenset({"a0"}), frozenset({"a1"})}
    assert infer_systems(fixtures.torus_with_arc(), "theta")[0] == {"a1"}
