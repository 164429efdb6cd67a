"""Degree-8 pipeline: quadratic behavior, inertia fields, hypothesis report."""

import random

import pytest

from noncrossed import numtheory as nt
from noncrossed.funcfield import FpPoly
from noncrossed.places import Place
from noncrossed.qz import QZ
from noncrossed.witness_deg8 import (QuadBehavior, build_deg8_witness,
                                     inertia_subfield, quadratic_behavior,
                                     unique_quartic_extension)


def P(p, s):
    return FpPoly.parse(p, s)


def V(p, s):
    return Place.finite(P(p, s))


def test_quadratic_behavior_examples():
    assert quadratic_behavior(P(3, "t"), V(3, "t")) is QuadBehavior.RAMIFIED
    # (t+1)(t+2) at v_t: residue 2, a nonsquare mod 3
    b = P(3, "t+1") * P(3, "t+2")
    assert quadratic_behavior(b, V(3, "t")) is QuadBehavior.INERT
    # t at v_{t+1}: residue -1 = 2, nonsquare
    assert quadratic_behavior(P(3, "t"), V(3, "t+1")) is QuadBehavior.INERT
    # t at v_{t+2}: residue 1, a square
    assert quadratic_behavior(P(3, "t"), V(3, "t+2")) is QuadBehavior.SPLIT
    with pytest.raises(ValueError):
        quadratic_behavior(P(3, "t^2"), V(3, "t"))  # square rejected


def test_quadratic_behavior_square_class_invariance():
    rng = random.Random(43)
    places = [V(3, "t"), V(3, "t+1"), V(3, "t+2"), V(3, "t^2+1")]
    for _ in range(150):
        d = FpPoly.make(3, [rng.randrange(3) for _ in range(rng.randrange(1, 4))])
        if d.is_zero:
            continue
        try:
            base = [quadratic_behavior(d, v) for v in places]
        except ValueError:
            continue  # d was a square
        s = FpPoly.make(3, [rng.randrange(3) for _ in range(rng.randrange(1, 3))])
        if s.is_zero:
            continue
        scaled = d * s * s
        assert [quadratic_behavior(scaled, v) for v in places] == base


def test_inertia_subfield_examples():
    a = P(3, "t")
    b = P(3, "t+1") * P(3, "t+2")
    assert inertia_subfield(a, b, V(3, "t")) == "sqrt-b"
    assert inertia_subfield(a, b, V(3, "t+1")) == "sqrt-a"
    # (t, t+1) at v_{t+2}: t is split, t+1 inert, t(t+1) inert -> unramified
    assert inertia_subfield(P(3, "t"), P(3, "t+1"), V(3, "t+2")) == "all"


def test_inertia_subfield_symmetry():
    rng = random.Random(47)
    swap = {"sqrt-a": "sqrt-b", "sqrt-b": "sqrt-a", "sqrt-ab": "sqrt-ab",
            "none": "none", "all": "all"}
    places = [V(3, "t"), V(3, "t+1"), V(3, "t+2")]
    for _ in range(100):
        a = FpPoly.make(3, [rng.randrange(3) for _ in range(rng.randrange(1, 4))])
        b = FpPoly.make(3, [rng.randrange(3) for _ in range(rng.randrange(1, 4))])
        if a.is_zero or b.is_zero:
            continue
        for v in places:
            try:
                lhs = inertia_subfield(a, b, v)
            except ValueError:
                continue  # not biquadratic
            assert inertia_subfield(b, a, v) == swap[lhs]


def test_unique_quartic_extension_examples():
    a = P(3, "t")
    b = P(3, "t+1") * P(3, "t+2")
    assert unique_quartic_extension(a, b, V(3, "t")) == (True, (2, 2))
    assert unique_quartic_extension(a, b, V(3, "t+1")) == (True, (2, 2))
    # t split and t+1 inert at v_{t+2}: not unique (two places, e=1, f=2)
    unique, (e, f) = unique_quartic_extension(P(3, "t"), P(3, "t+1"), V(3, "t+2"))
    assert not unique and (e, f) == (1, 2)


def test_nonsquare_facts_for_admissible_primes():
    # the two arithmetic facts the construction rests on, brute-forced
    for p in range(3, 500):
        if not nt.is_prime(p) or p % 8 != 3:
            continue
        squares = {x * x % p for x in range(1, p)}
        assert 2 not in squares
        assert (p - 1) not in squares
        assert nt.is_square_mod(2, p) is False
        assert nt.is_square_mod(-1, p) is False


def test_build_witness_defaults():
    w = build_deg8_witness(3)
    assert w.all_pass
    assert str(w.a) == "t" and str(w.b) == "t^2+2"  # (t+1)(t+2) over F_3
    assert w.v1.label() == "t" and w.v2.label() == "t+1"
    assert [str(inv) for _, inv in w.profile.entries] == ["3/8", "5/8"]
    assert w.certificate is not None
    assert w.certificate.place.label() == "t+2"
    assert w.certificate.isotropy_vector == (1, 1, 1)
    assert "C_A(K)((ZxZ))" in w.conclusion


def test_build_witness_other_primes():
    for p in (11, 19):
        w = build_deg8_witness(p)
        assert w.all_pass, [c for c in w.checks if not c.passed]
        # certificate's second residue form rests on 2 being a nonsquare
        assert w.certificate.place.label() == "t+2"


def test_build_witness_rejects_bad_p():
    for p in (5, 7, 13, 9, 2):
        with pytest.raises(ValueError):
            build_deg8_witness(p)


def test_witness_profile_consequences():
    from noncrossed.invariants import contains_subfield, profile_degree

    w = build_deg8_witness(3)
    assert profile_degree(w.profile) == 8
    verdict = contains_subfield(w.profile, w.extension, 4)
    assert verdict.contained and verdict.lcm_of_orders == 2
    assert all(inv == QZ(1, 2) for inv in verdict.extended.values())


def test_witness_json_shape():
    obj = build_deg8_witness(3).to_json()
    assert obj["p"] == 3
    assert obj["a"] == "t"
    assert obj["profile"]["base"] == {"Fp_t": 3}
    assert obj["non_isometry_certificate"]["anisotropic_at"] == "t+2"
    assert obj["non_isometry_certificate"]["isotropy_vector"] == [1, 1, 1]
