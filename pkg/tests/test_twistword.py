import json
import random

import pytest

from handle_irr import fixtures
from handle_irr.doubling import DISC, build_QR
from handle_irr.twistword import (
    ANNULUS, ASSERTED, CERTIFIED, COMPUTED, CONDITIONAL, CURVE, DISC_TARGET, REJECTED, THEOREM,
    TwistLetter, TwistWord, WordSyntaxError, boundary_restriction, certify_genus2,
    certify_irreducible, parse_word, subordination, validate_method_word,
)

OCT_C, OCT_D = ["beta", "delta"], ["alpha", "gamma"]


def test_parse_and_format():
    w = parse_word("T+Δ T+A(a1) T-A(a0)")
    assert w.letters == (TwistLetter(DISC_TARGET, None, 1), TwistLetter(ANNULUS, "a1", 1),
                         TwistLetter(ANNULUS, "a0", -1))
    assert str(w) == "T+Δ T+A(a1) T-A(a0)"
    assert parse_word("T-Delta T+C(x.0)").letters == (TwistLetter(DISC_TARGET, None, -1),
                                                      TwistLetter(CURVE, "x.0", 1))


@pytest.mark.parametrize("bad", ["", "T*A(a)", "TA(a)", "T+B(a)", "T+A()", "T+A(a"])
def test_parse_errors(bad):
    with pytest.raises(WordSyntaxError):
        parse_word(bad)


def test_method_word_torus_roles():
    w = fixtures.TORUS_WORD
    assert validate_method_word(w, ["a1"], ["a0"]) == []
    # with the other assignment the disc shares the sign of a D annulus
    kinds = {k for k, _ in validate_method_word(w, ["a0"], ["a1"])}
    assert "b" in kinds


def test_method_word_octagon():
    assert validate_method_word(fixtures.OCT_WORD, OCT_C, OCT_D) == []


def test_missing_annulus_breaks_coverage():
    bad = validate_method_word("T-Δ T-A(beta) T+A(alpha) T+A(gamma)", OCT_C, OCT_D)
    assert [k for k, _ in bad] == ["c"]
    assert "appear at least once" in bad[0][1]


def test_repeated_disc_letters_are_fine():
    w = "T-Δ T-A(beta) T-Δ T-A(delta) T+A(alpha) T+A(gamma)"
    assert validate_method_word(w, OCT_C, OCT_D) == []


def test_foreign_letters():
    bad = validate_method_word("T-Δ T-A(beta) T-A(delta) T+A(alpha) T+A(gamma) T+A(eps)",
                               OCT_C, OCT_D)
    assert [k for k, _ in bad] == ["target"]
    bad = validate_method_word("T-C(beta)", OCT_C, OCT_D)
    assert "target" in {k for k, _ in bad}


def test_boundary_restriction_torus():
    DM, qr, _ = build_QR(fixtures.torus_with_arc(), ["a0"], ["a1"], "theta")
    bw = boundary_restriction(fixtures.TORUS_WORD, DM)
    left = {x.curve for x in bw if x.sign < 0}
    right = {x.curve for x in bw if x.sign > 0}
    assert left == {"a0.1", "a1.0"}
    assert right == {"a0.0", "a1.1", DISC}
    assert subordination(bw, qr.Q, qr.R) == []


def test_single_annulus_letter():
    DM, _, _ = build_QR(fixtures.octagon(), OCT_C, OCT_D, "theta")
    bw = boundary_restriction("T+A(beta)", DM)
    assert [(x.curve, x.sign) for x in bw] == [("beta.1", 1), ("beta.0", -1)]


def test_boundary_restriction_octagon():
    DM, qr, _ = build_QR(fixtures.octagon(), OCT_C, OCT_D, "theta")
    bw = boundary_restriction(fixtures.OCT_WORD, DM)
    assert subordination(bw, qr.Q, qr.R) == []


def test_restriction_provenance():
    DM, _, _ = build_QR(fixtures.octagon(), OCT_C, OCT_D, "theta")
    from handle_irr.surfmap import MapError
    with pytest.raises(MapError):
        boundary_restriction("T+A(a0)", DM)


def test_restriction_property_random():
    """Every word passing the method check restricts to a Penner product."""
    rng = random.Random(11)
    DM, qr, _ = build_QR(fixtures.octagon(), OCT_C, OCT_D, "theta")
    hits = 0
    for _ in range(200):
        s = rng.choice((1, -1))
        letters = [TwistLetter(ANNULUS, c, s) for c in OCT_D]
        letters += [TwistLetter(ANNULUS, c, -s) for c in OCT_C]
        letters.append(TwistLetter(DISC_TARGET, None, -s))
        pool = OCT_C + OCT_D + [None]
        for _ in range(rng.randint(0, 5)):
            c = rng.choice(pool)
            sign = rng.choice((1, -1))
            letters.append(TwistLetter(DISC_TARGET if c is None else ANNULUS, c, sign))
        rng.shuffle(letters)
        w = TwistWord(tuple(letters))
        if validate_method_word(w, OCT_C, OCT_D) == []:
            hits += 1
            assert subordination(boundary_restriction(w, DM), qr.Q, qr.R) == []
    assert hits >= 30


def test_certify_torus():
    cert = certify_irreducible(fixtures.torus_with_arc(), ["a0"], ["a1"], "theta", fixtures.TORUS_WORD)
    assert cert.verdict == CERTIFIED
    assert [(s.n, s.tag, s.passed) for s in cert.steps] == (
        [(i, COMPUTED, True) for i in range(1, 6)] + [(6, THEOREM, True), (7, THEOREM, True)])


def test_certify_octagon():
    cert = certify_irreducible(fixtures.octagon(), OCT_C, OCT_D, "theta", fixtures.OCT_WORD)
    assert cert.verdict == CERTIFIED
    assert all(s.passed for s in cert.steps)


def test_certify_missing_disc_letter():
    cert = certify_irreducible(fixtures.octagon(), OCT_C, OCT_D, "theta",
                               "T-A(beta) T-A(delta) T+A(alpha) T+A(gamma)")
    assert cert.verdict == REJECTED
    assert cert.steps[-1].n == 5 and not cert.steps[-1].passed
    assert "coverage" in cert.reason


def test_certify_same_sign():
    cert = certify_irreducible(fixtures.octagon(), OCT_C, OCT_D, "theta",
                               "T+Δ T+A(beta) T+A(delta) T+A(alpha) T+A(gamma)")
    assert cert.verdict == REJECTED
    assert cert.steps[-1].n == 5
    assert "sign partition" in cert.reason


def test_certify_stops_at_first_failure():
    M = fixtures.bigon_torus()
    cert = certify_irreducible(M, ["a0"], ["a1"], "theta", fixtures.TORUS_WORD)
    assert cert.verdict == REJECTED and len(cert.steps) == 1
    cert = certify_irreducible(fixtures.octagon(), OCT_C, OCT_D, "alpha", fixtures.OCT_WORD)
    assert [s.passed for s in cert.steps] == [True, False]


def test_certificate_is_deterministic():
    a = certify_irreducible(fixtures.octagon(), OCT_C, OCT_D, "theta", fixtures.OCT_WORD)
    b = certify_irreducible(fixtures.octagon(), OCT_C, OCT_D, "theta", fixtures.OCT_WORD)
    assert a == b and a.text() == b.text() and a.to_json() == b.to_json()


def test_certificate_formats():
    cert = certify_irreducible(fixtures.octagon(), OCT_C, OCT_D, "theta", fixtures.OCT_WORD)
    lines = cert.text().splitlines()
    assert lines[0].startswith("step 1 computed pass ")
    assert lines[-1] == f"verdict {CERTIFIED}"
    doc = json.loads(cert.to_json())
    assert doc["format"] == 1 and doc["verdict"] == CERTIFIED
    assert [s["n"] for s in doc["steps"]] == list(range(1, 8))


def test_genus2_certificate():
    fx = fixtures.FIXTURES["FIX-H2"]
    cert = certify_genus2(fx.map, ["C0"], ["C1"], fixtures.H2_WORD)
    assert cert.verdict == CONDITIONAL
    assert all(s.passed for s in cert.steps)
    assert [s.tag for s in cert.steps if s.tag == COMPUTED] == [COMPUTED] * 3
    assert {s.tag for s in cert.steps[3:5]} == {THEOREM}
    assert all(s.tag == ASSERTED for s in cert.steps[5:])


def test_genus2_same_sign_fails():
    cert = certify_genus2(fixtures.genus2_closed(), ["C0"], ["C1"], "T+C(C0) T+C(C1)")
    assert cert.verdict == REJECTED and cert.steps[-1].n == 3


def test_genus3_is_rejected_with_window():
    cert = certify_genus2(fixtures.genus3_closed(), ["C0"], ["C1"], "T+C(C0) T-C(C1)")
    assert cert.verdict == REJECTED
    assert "chi(F) = 0, n = 2" in cert.steps[0].description
