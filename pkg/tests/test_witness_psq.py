"""Degree-p^2 pipeline: searches, splitting data, hypothesis reports."""

from math import gcd

import pytest

from noncrossed import numtheory as nt
from noncrossed.qz import QZ
from noncrossed.witness_psq import (build_psq_witness, find_inert_prime,
                                    find_ramified_prime, psq_hypothesis_checks,
                                    subfield_splitting)


def brute_order(a, n):
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def brute_primitive_root(q):
    return next(m for m in range(2, q) if brute_order(m, q) == q - 1)


def dlog(g, x, q):
    v = 1
    for k in range(q - 1):
        if v == x % q:
            return k
        v = v * g % q
    raise AssertionError


def splitting_oracle(ell, p, q):
    """Order of Frobenius in the degree-p quotient, via discrete logs."""
    if ell == q:
        return (p, 1, 1)
    g = brute_primitive_root(q)
    a = dlog(g, ell, q)
    f = p // gcd(p, a)
    return (1, f, p // f)


def test_find_ramified_prime_examples():
    assert find_ramified_prime(3) == 13
    assert find_ramified_prime(5) == 31
    # enumerate primes = 8 mod 49 by brute force: 8, 57, 106, ... are
    # composite until 449
    assert find_ramified_prime(7) == 449
    with pytest.raises(ValueError):
        find_ramified_prime(4)
    with pytest.raises(ValueError):
        find_ramified_prime(2)


def test_find_ramified_prime_is_smallest():
    for p in (3, 5, 7, 11):
        q = find_ramified_prime(p)
        assert nt.is_prime(q) and q % (p * p) == (1 + p) % (p * p)
        for c in range(2, q):
            assert c % (p * p) != (1 + p) % (p * p) or not nt.is_prime(c)


def test_find_inert_prime_examples():
    assert find_inert_prime(3, 13, 2) == 41
    assert find_inert_prime(5, 31, 3) == 127
    # residue sanity: 41 = 2 mod 3 and 41 = 2 = m mod 13
    assert 41 % 3 == 2 and 41 % 13 == 2


def test_find_inert_prime_congruences_and_floor():
    for p in (3, 5, 7):
        q = find_ramified_prime(p)
        m = nt.primitive_root(q)
        r = find_inert_prime(p, q, m)
        assert nt.is_prime(r)
        assert r % p == 2 % p
        assert r % q == m % q
        assert r > q and r not in (p, q)
    with pytest.raises(ValueError):
        find_inert_prime(3, 13, 3)  # 3 does not generate (Z/13)^x


def test_subfield_splitting_examples():
    s = subfield_splitting(13, 3, 13)
    assert (s.e, s.f, s.g) == (3, 1, 1)  # totally ramified at q
    s = subfield_splitting(41, 3, 13)
    assert (s.e, s.f, s.g) == (1, 3, 1)  # inertial
    # 3 has order 3 mod 13 and dlog 4, so its Frobenius generates the quotient
    s = subfield_splitting(3, 3, 13)
    assert (s.e, s.f, s.g) == splitting_oracle(3, 3, 13) == (1, 3, 1)


def test_subfield_splitting_matches_dlog_oracle():
    for p, q in ((3, 13), (5, 31), (3, 7), (7, 29), (3, 19)):
        for ell in range(2, 250):
            if not nt.is_prime(ell):
                continue
            s = subfield_splitting(ell, p, q)
            assert (s.e, s.f, s.g) == splitting_oracle(ell, p, q), (p, q, ell)
            assert s.e * s.f * s.g == p


def test_subfield_splitting_preconditions():
    with pytest.raises(ValueError):
        subfield_splitting(5, 3, 11)  # 11 is not 1 mod 3
    with pytest.raises(ValueError):
        subfield_splitting(6, 3, 13)


def test_hypothesis_checks_pass_for_oracle_values():
    checks = {c.name: c.passed for c in psq_hypothesis_checks(3, 13, 41)}
    assert all(checks.values())
    assert set(checks) == {"totally-ramified-at-v1", "residue-char-v1",
                           "no-p2-roots-of-unity-v1", "inertial-at-v2",
                           "residue-field-v2-finite", "residue-size-v2-mod-p"}


def test_hypothesis_checks_hanke_field():
    # q = 7, p = 3: 7 is not 1 mod 9, so F_7 has no ninth roots of unity
    checks = {c.name: c.passed for c in psq_hypothesis_checks(3, 7, 41)}
    assert checks["no-p2-roots-of-unity-v1"]


def test_hypothesis_checks_reject_bad_inert_prime():
    # r = 13 mod 3 = 1: residue condition must fail
    checks = {c.name: c.passed for c in psq_hypothesis_checks(3, 13, 13)}
    assert not checks["residue-size-v2-mod-p"]
    # doctored r = 1 mod p
    checks = {c.name: c.passed for c in psq_hypothesis_checks(3, 13, 7)}
    assert not checks["residue-size-v2-mod-p"]  # 7 = 1 mod 3


def test_build_witness_p3():
    w = build_psq_witness(3)
    assert (w.q, w.m, w.r) == (13, 2, 41)
    assert w.all_pass
    assert w.profile.invariant_at(w.profile.places[0]) == QZ(8, 9)
    assert {str(inv) for _, inv in w.profile.entries} == {"8/9", "1/9"}


def test_build_witness_p5_p7():
    w = build_psq_witness(5)
    assert (w.q, w.m, w.r) == (31, 3, 127)
    assert w.all_pass
    w = build_psq_witness(7)
    assert w.q == 449 and w.all_pass


def test_witness_unique_extension_invariant():
    for p in (3, 5):
        w = build_psq_witness(p)
        for place in w.profile.places:
            pairs = w.extension.pairs_above(place)
            assert len(pairs) == 1          # g = 1: unique place above
            e, f = pairs[0]
            assert e * f == p


def test_witness_json_shape():
    obj = build_psq_witness(3).to_json()
    assert obj["p"] == 3 and obj["q"] == 13 and obj["m"] == 2 and obj["r"] == 41
    assert obj["profile"]["entries"] == [{"place": "13", "inv": "8/9"},
                                         {"place": "41", "inv": "1/9"}]
    assert all(set(c) == {"name", "pass", "detail"} for c in obj["checks"])
    assert "conclusion" in obj


def test_budget_exhaustion_propagates():
    with pytest.raises(nt.SearchBudgetExceeded):
        build_psq_witness(3, nt.SearchBudget(max_candidate=10))
