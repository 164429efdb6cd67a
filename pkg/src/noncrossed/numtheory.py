"""Deterministic primality, multiplicative orders, primitive roots, and
prime searches in arithmetic progressions.

Primality is exact: Miller-Rabin with the fixed base set below is a proven
deterministic test for n < 3.3 * 10^24, far beyond anything the searches
produce.  All outputs follow a smallest-first convention so runs are
reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Proven deterministic Miller-Rabin bases for n < 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_MAX_CANDIDATE = 10**7


class SearchBudgetExceeded(RuntimeError):
    """Raised when a progression search passes its candidate bound."""


@dataclass(frozen=True)
class SearchBudget:
    """Value bound for progression searches.

    Dirichlet guarantees a prime exists in any admissible class but gives no
    effective bound, so exhaustion is a reported failure, never a crash.
    """

    max_candidate: int = DEFAULT_MAX_CANDIDATE

    def __post_init__(self):
        if self.max_candidate < 1:
            raise ValueError("budget must be positive")


def is_prime(n: int) -> bool:
    """Exact primality test (deterministic for all toolkit-scale inputs)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization by trial division; toolkit inputs are small."""
    if n < 1:
        raise ValueError("can only factor positive integers")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    phi = n
    for p in factor_int(n):
        phi -= phi // p
    return phi


def mult_order(a: int, n: int) -> int:
    """Smallest k >= 1 with a^k = 1 mod n.

    Computed by reducing the group order phi(n) prime by prime, so large
    moduli do not force a linear scan.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    order = euler_phi(n)
    for p in factor_int(order):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def primitive_root(q: int) -> int:
    """Smallest generator of (Z/qZ)^x for q prime (1 for q = 2)."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q == 2:
        return 1
    group_order = q - 1
    prime_divisors = list(factor_int(group_order))
    for m in range(2, q):
        if all(pow(m, group_order // ell, q) != 1 for ell in prime_divisors):
            return m
    raise AssertionError("unreachable: every prime has a primitive root")


def smallest_prime_in_class(a: int, m: int, budget: SearchBudget | None = None,
                            above: int = 0) -> int:
    """Smallest prime p = a mod m with p > above, within the budget."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a % m, m) != 1:
        raise ValueError(f"class {a % m} mod {m} contains at most one prime")
    budget = budget or SearchBudget()
    c = a % m
    if c == 0:
        c = m
    while c <= above or not is_prime(c):
        c += m
        if c > budget.max_candidate:
            raise SearchBudgetExceeded(
                f"no prime = {a % m} mod {m} above {above} found below {budget.max_candidate}")
    return c


def prime_in_ap(a: int, m: int, budget: SearchBudget | None = None) -> int:
    """Smallest prime p = a mod m with p strictly larger than the modulus."""
    return smallest_prime_in_class(a, m, budget, above=m)


def is_square_mod(a: int, p: int, d: int = 1) -> bool:
    """Whether a nonzero prime-subfield element is a square in F_{p^d}.

    Euler's criterion a^((p^d - 1)/2) = 1; for a in the prime subfield the
    exponentiation collapses to arithmetic mod p.  General residue-field
    elements carry their own square test on the residue-field type.
    """
    if p == 2 or not is_prime(p):
        raise ValueError("an odd prime characteristic is required")
    if d < 1:
        raise ValueError("field degree must be >= 1")
    a %= p
    if a == 0:
        raise ValueError("zero is neither square class")
    return pow(a, (p**d - 1) // 2, p) == 1
