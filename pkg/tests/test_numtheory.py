"""Number-theoretic primitives against exhaustive brute-force oracles."""

import random
from math import gcd

import pytest

from noncrossed import numtheory as nt


def brute_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def brute_order(a, n):
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def brute_primitive_root(q):
    if q == 2:
        return 1
    for m in range(2, q):
        if brute_order(m, q) == q - 1:
            return m
    raise AssertionError


def test_is_prime_examples():
    assert nt.is_prime(13)
    assert not nt.is_prime(1)
    assert nt.is_prime(41)
    assert not nt.is_prime(0)
    assert nt.is_prime(2)


def test_is_prime_against_brute_force():
    for n in range(2000):
        assert nt.is_prime(n) == brute_is_prime(n), n
    # a couple of large known values
    assert nt.is_prime(2**61 - 1)
    assert not nt.is_prime((2**31 - 1) * (2**13 - 1))


def test_mult_order_examples():
    assert nt.mult_order(2, 13) == 12
    assert nt.mult_order(1, 17) == 1
    assert nt.mult_order(41, 13) == 12  # 41 = 2 mod 13
    with pytest.raises(ValueError):
        nt.mult_order(6, 9)


def test_mult_order_divides_phi():
    rng = random.Random(3)
    for _ in range(400):
        n = rng.randrange(2, 400)
        a = rng.randrange(1, n)
        if gcd(a, n) != 1:
            continue
        order = nt.mult_order(a, n)
        assert nt.euler_phi(n) % order == 0


def test_primitive_root_examples():
    assert nt.primitive_root(13) == brute_primitive_root(13) == 2
    assert nt.primitive_root(7) == brute_primitive_root(7) == 3
    assert nt.primitive_root(31) == brute_primitive_root(31) == 3
    with pytest.raises(ValueError):
        nt.primitive_root(12)


def test_primitive_root_certificate_property():
    for q in (5, 13, 31, 101, 199):
        m = nt.primitive_root(q)
        for ell in nt.factor_int(q - 1):
            assert pow(m, (q - 1) // ell, q) != 1


def test_prime_in_ap_examples():
    assert nt.prime_in_ap(4, 9) == 13
    assert nt.prime_in_ap(6, 25) == 31
    # 2 is prime and 2 = 2 mod 39, but the result must exceed the modulus
    assert nt.prime_in_ap(2, 39) == 41


def test_prime_in_ap_minimality_by_rescan():
    for a, m in ((4, 9), (6, 25), (2, 39), (3, 10)):
        p = nt.prime_in_ap(a, m)
        assert nt.is_prime(p) and p % m == a % m and p > m
        for c in range(m + 1, p):
            assert c % m != a % m or not nt.is_prime(c)


def test_prime_in_ap_preconditions_and_budget():
    with pytest.raises(ValueError):
        nt.prime_in_ap(3, 9)  # gcd(3, 9) != 1
    with pytest.raises(nt.SearchBudgetExceeded):
        nt.prime_in_ap(4, 9, nt.SearchBudget(max_candidate=12))


def test_is_square_mod_examples():
    assert not nt.is_square_mod(2, 3)
    assert nt.is_square_mod(1, 7)
    assert nt.is_square_mod(1, 3, d=4)
    assert not nt.is_square_mod(-1, 3)
    with pytest.raises(ValueError):
        nt.is_square_mod(0, 5)
    with pytest.raises(ValueError):
        nt.is_square_mod(3, 4)


def test_is_square_mod_against_square_sets():
    for p in (3, 5, 7, 11, 13, 199):
        squares = {x * x % p for x in range(1, p)}
        for a in range(1, p):
            assert nt.is_square_mod(a, p) == (a in squares)


def test_is_square_mod_in_extensions():
    # in F_{p^2} every prime-field element is a square (norms are surjective)
    for p in (3, 7, 11):
        for a in range(1, p):
            assert nt.is_square_mod(a, p, d=2)
