"""The degree-p^2 witness pipeline over Q.

For an odd prime p the pipeline finds a prime q = 1+p mod p^2 (so the
degree-p subfield K of the q-th cyclotomic field is totally ramified at q
and F_q has no p^2-th roots of unity), a generator m of (Z/qZ)^x, and a
prime r = 2 mod p, = m mod q (so K is inertial at r and |F_r| is not 0 or
1 mod p).  The invariant profile {v_q: (p^2-1)/p^2, v_r: 1/p^2} then
certifies a division algebra of degree p^2 containing K with the two
distinguished completions division algebras.

The subfield K never appears symbolically: its ramification and inertia
data follow from group theory in the cyclic group (Z/qZ)^x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import numtheory
from .invariants import (BaseField, InvariantProfile, LocalExtensionData,
                         certify_division_algebra, contains_subfield)
from .numtheory import SearchBudget
from .places import Place
from .qz import QZ
from .reporting import CheckResult, all_pass, checks_to_json


@dataclass(frozen=True)
class SplittingData:
    """Decomposition (e, f, g) of a rational prime in the degree-p subfield
    of the q-th cyclotomic field: e*f*g = p."""

    ell: int
    e: int
    f: int
    g: int

    def __post_init__(self):
        if self.e < 1 or self.f < 1 or self.g < 1:
            raise ValueError("local degrees must be positive")


def find_ramified_prime(p: int, budget: SearchBudget | None = None) -> int:
    """Smallest prime q = 1+p mod p^2 (hence q = 1 mod p but not mod p^2)."""
    if p == 2 or not numtheory.is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return numtheory.prime_in_ap(1 + p, p * p, budget)


def find_inert_prime(p: int, q: int, m: int,
                     budget: SearchBudget | None = None) -> int:
    """Smallest prime r = 2q + m(1-q) mod pq with r > q.

    The class forces r = 2 mod p and r = m mod q, which keeps r distinct
    from p and q; the floor r > q makes the choice canonical.
    """
    if numtheory.mult_order(m, q) != q - 1:
        raise ValueError(f"{m} does not generate (Z/{q}Z)^x")
    a = (2 * q + m * (1 - q)) % (p * q)
    r = numtheory.smallest_prime_in_class(a, p * q, budget, above=q)
    assert r % p == 2 % p and r % q == m % q and r not in (p, q)
    return r


def subfield_splitting(ell: int, p: int, q: int) -> SplittingData:
    """Behavior of the prime ell in the degree-p subfield K of Q(zeta_q).

    q is totally ramified.  Any other prime is unramified with inertia
    degree the order of its Frobenius in the degree-p quotient of the
    cyclic group (Z/qZ)^x: f = d / gcd(d, (q-1)/p) for d the order of ell
    mod q.
    """
    if (q - 1) % p != 0:
        raise ValueError(f"(Z/{q}Z)^x has no quotient of order {p}")
    if not numtheory.is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if ell == q:
        return SplittingData(ell, p, 1, 1)
    d = numtheory.mult_order(ell, q)
    f = d // gcd(d, (q - 1) // p)
    return SplittingData(ell, 1, f, p // f)


def psq_hypothesis_checks(p: int, q: int, r: int) -> list[CheckResult]:
    """The ramification and residue-field conditions at v_q and v_r."""
    checks = []
    split_q = subfield_splitting(q, p, q)
    checks.append(CheckResult(
        "totally-ramified-at-v1", split_q.e == p,
        f"K/Q has e = {split_q.e} at {q}; totally ramified requires e = {p}"))
    checks.append(CheckResult(
        "residue-char-v1", q != p,
        f"residue characteristic at v_q is {q}, distinct from {p}"))
    checks.append(CheckResult(
        "no-p2-roots-of-unity-v1", (q - 1) % (p * p) != 0,
        f"q = {q} is not 1 mod {p * p}, so F_q contains no primitive "
        f"{p}^2-th root of unity"))
    split_r = subfield_splitting(r, p, q)
    checks.append(CheckResult(
        "inertial-at-v2", split_r.e == 1 and split_r.f == p,
        f"K/Q has (e, f) = ({split_r.e}, {split_r.f}) at {r}; "
        f"inertial requires (1, {p})"))
    checks.append(CheckResult(
        "residue-field-v2-finite", True, f"residue field at v_r is F_{r}"))
    checks.append(CheckResult(
        "residue-size-v2-mod-p", r % p not in (0, 1),
        f"|F_r| = {r} is {r % p} mod {p}, required != 0, 1"))
    return checks


@dataclass(frozen=True)
class PsqWitness:
    """Certificate data for the degree-p^2 construction."""

    p: int
    q: int
    m: int
    r: int
    profile: InvariantProfile
    extension: LocalExtensionData
    checks: tuple[CheckResult, ...]
    conclusion: str

    @property
    def all_pass(self) -> bool:
        return all_pass(self.checks)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "m": self.m,
            "r": self.r,
            "profile": self.profile.to_json(),
            "extension": self.extension.to_json(),
            "checks": checks_to_json(self.checks),
            "conclusion": self.conclusion,
        }


def build_psq_witness(p: int, budget: SearchBudget | None = None) -> PsqWitness:
    """Run the searches, assemble the profile, and verify every hypothesis."""
    if p == 2 or not numtheory.is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    q = find_ramified_prime(p, budget)
    m = numtheory.primitive_root(q)
    r = find_inert_prime(p, q, m, budget)

    n = p * p
    v_q = Place.rational(q)
    v_r = Place.rational(r)
    profile = InvariantProfile.make(BaseField.rationals(), {
        v_q: QZ.make(Fraction(n - 1, n)),
        v_r: QZ.make(Fraction(1, n)),
    })

    split_q = subfield_splitting(q, p, q)
    split_r = subfield_splitting(r, p, q)
    extension = LocalExtensionData.make(p, {
        v_q: [(split_q.e, split_q.f)] * split_q.g,
        v_r: [(split_r.e, split_r.f)] * split_r.g,
    })

    checks = [
        CheckResult("q-congruence", q % (p * p) == (1 + p) % (p * p),
                    f"q = {q} is 1+{p} mod {p * p}"),
        CheckResult("m-generates", numtheory.mult_order(m, q) == q - 1,
                    f"{m} generates (Z/{q}Z)^x"),
        CheckResult("r-congruences", r % p == 2 % p and r % q == m % q,
                    f"r = {r} is 2 mod {p} and {m} mod {q}"),
    ]
    checks += certify_division_algebra(profile, v_q, v_r, extension, n=n, k=p)
    checks += psq_hypothesis_checks(p, q, r)

    verdict = contains_subfield(profile, extension, p)
    checks.append(CheckResult(
        "containment-lcm", verdict.lcm_of_orders == p,
        f"LCM of base-changed invariant orders is {verdict.lcm_of_orders}, "
        f"expected {p}"))

    conclusion = (f"noncrossed product division algebra of degree {n} over the "
                  f"Laurent series field Q((x)): C_A(K)((Z)) for the certified "
                  f"K and invariant profile")
    return PsqWitness(p, q, m, r, profile, extension, tuple(checks), conclusion)
