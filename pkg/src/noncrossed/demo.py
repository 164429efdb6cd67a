"""Seeded property runs on the two shipped twisted-series contexts.

The Hamilton context is the quaternion algebra (-1, -1) with K = Q(i) and
index group Z; the biquadratic context is (-1,-1) tensor (-3,-1) with
K = Q(sqrt(-1), sqrt(-3)) and index group Z x Z (lex).  In both cases the
centralizer is a field, so products of nonzero series stay nonzero and the
valuation is additive.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from . import algebras
from .reporting import CheckResult, all_pass, checks_to_json
from .series import EpsilonMap, MNContext, OrderedGroup, TwistedSeries, degree_identity


@lru_cache(maxsize=None)
def hamilton_context() -> MNContext:
    alg, spec = algebras.quaternion(-1, -1)
    eps = EpsilonMap.make(OrderedGroup.integers(), orders=(2,), images=((1,),))
    return MNContext(alg, spec, eps, name="hamilton-Z")


@lru_cache(maxsize=None)
def biquadratic_context() -> MNContext:
    a1, s1 = algebras.quaternion(-1, -1)
    a2, s2 = algebras.quaternion(-3, -1)
    t = algebras.tensor(a1, a2)
    spec = algebras.tensor_subfield(t, a1, s1, a2, s2)
    eps = EpsilonMap.make(OrderedGroup.lex_plane(), orders=(2, 2),
                          images=((1, 0), (0, 1)))
    return MNContext(t, spec, eps, name="biquadratic-ZxZ")


def _random_group_element(ctx: MNContext, rng: random.Random):
    if ctx.eps.group.kind == "Z":
        return rng.randrange(-3, 5)
    return (rng.randrange(-2, 3), rng.randrange(-2, 3))


def _random_coefficient(ctx: MNContext, rng: random.Random):
    out = ctx.alg.zero
    for b in ctx.cent_basis:
        c = rng.randrange(-2, 3)
        if c:
            out = out + b.scaled(c)
    return out


def random_series(ctx: MNContext, rng: random.Random, max_terms: int = 3,
                  allow_zero: bool = False) -> TwistedSeries:
    """A random finitely supported series with centralizer coefficients."""
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        terms[_random_group_element(ctx, rng)] = _random_coefficient(ctx, rng)
    s = TwistedSeries.make(ctx, terms)
    if s.is_zero and not allow_zero:
        # all sampled coefficients vanished; redraw
        return random_series(ctx, rng, max_terms)
    return s


def random_central_series(ctx: MNContext, rng: random.Random) -> TwistedSeries:
    """A structurally central series: support in ker eps, coefficients in Q*1."""
    group = ctx.eps.group
    n = ctx.eps.orders[0]
    terms = {}
    for _ in range(rng.randrange(1, 3)):
        if group.kind == "Z":
            gamma = n * rng.randrange(-2, 3)
        else:
            gamma = (ctx.eps.orders[0] * rng.randrange(-2, 3),
                     ctx.eps.orders[1] * rng.randrange(-2, 3))
        terms[gamma] = ctx.alg.scalar(Fraction(rng.randrange(-3, 4)))
    return TwistedSeries.make(ctx, terms)


def _alpha_formula(ctx: MNContext, gamma, r, delta, s):
    """The leading coefficient of (a_gamma r)(a_delta s), computed directly."""
    g, h = ctx.eps.apply(gamma), ctx.eps.apply(delta)
    alg = ctx.alg
    return alg.mul(ctx.unit_invs[ctx.eps.compose(g, h)],
                   alg.mul(alg.mul(ctx.units[g], r), alg.mul(ctx.units[h], s)))


def context_report(ctx: MNContext, samples: int, seed: int,
                   expected_dims: tuple[int, int]) -> dict:
    """Run the seeded identity checks on one context."""
    rng = random.Random(seed)
    checks: list[CheckResult] = []

    dim_d, dim_a, equal = degree_identity(ctx)
    checks.append(CheckResult(
        "degree-identity", equal and (dim_d, dim_a) == expected_dims,
        f"[D : Z(D)] = {dim_d}, [A : F] = {dim_a}, expected {expected_dims}"))

    val_ok = assoc_ok = distrib_ok = leading_ok = 0
    for _ in range(samples):
        s1 = random_series(ctx, rng)
        s2 = random_series(ctx, rng)
        s3 = random_series(ctx, rng)
        prod = s1 * s2
        v1, v2 = s1.valuation(), s2.valuation()
        if not prod.is_zero and prod.valuation() == ctx.eps.group.add(v1, v2):
            val_ok += 1
            lead = _alpha_formula(ctx, v1, s1.terms[v1], v2, s2.terms[v2])
            if prod.leading() == lead and not lead.is_zero:
                leading_ok += 1
        if prod * s3 == s1 * (s2 * s3):
            assoc_ok += 1
        if s1 * (s2 + s3) == s1 * s2 + s1 * s3:
            distrib_ok += 1
    checks.append(CheckResult(
        "valuation-additivity", val_ok == samples,
        f"v(s1*s2) = v(s1)+v(s2) in {val_ok}/{samples} samples"))
    checks.append(CheckResult(
        "leading-coefficient", leading_ok == samples,
        f"leading coefficient matches the twist formula and is nonzero in "
        f"{leading_ok}/{samples} samples"))
    checks.append(CheckResult(
        "associativity", assoc_ok == samples,
        f"(s1*s2)*s3 = s1*(s2*s3) in {assoc_ok}/{samples} samples"))
    checks.append(CheckResult(
        "distributivity", distrib_ok == samples,
        f"s1*(s2+s3) = s1*s2 + s1*s3 in {distrib_ok}/{samples} samples"))

    center_samples = min(samples, 200)
    center_ok = 0
    for i in range(center_samples):
        s = (random_central_series(ctx, rng) if i % 4 == 0
             else random_series(ctx, rng, allow_zero=True))
        if s.is_central() == s.is_central_structural():
            center_ok += 1
    checks.append(CheckResult(
        "center-classification", center_ok == center_samples,
        f"commutation test matches the structural F((ker eps)) criterion in "
        f"{center_ok}/{center_samples} samples"))

    invert_samples = min(samples, 20)
    invert_ok = 0
    cutoff = 6 if ctx.eps.group.kind == "Z" else (0, 6)
    for _ in range(invert_samples):
        s = random_series(ctx, rng)
        while ctx.alg.inverse(s.leading()) is None:
            s = random_series(ctx, rng)
        t = s.invert_up_to(cutoff)
        residual = s * t - TwistedSeries.one(ctx)
        if residual.is_zero or residual.valuation() > cutoff:
            invert_ok += 1
    checks.append(CheckResult(
        "invert-up-to-cutoff", invert_ok == invert_samples,
        f"supp(s*t - 1) lies above the cutoff {cutoff} in "
        f"{invert_ok}/{invert_samples} samples"))

    return {
        "name": ctx.name,
        "group": str(ctx.eps.group),
        "dim_over_center": dim_d,
        "dim_algebra": dim_a,
        "centralizer_dim": len(ctx.cent_basis),
        "checks": checks_to_json(checks),
    }


def _hamilton_center_spot_checks(ctx: MNContext) -> list[CheckResult]:
    one = ctx.alg.one
    i = ctx.alg.basis_element(1)
    cases = [
        ("a_2*1-central", TwistedSeries.make(ctx, {2: one}), True),
        ("a_1*1-not-central", TwistedSeries.make(ctx, {1: one}), False),
        ("a_2*i-not-central", TwistedSeries.make(ctx, {2: i}), False),
    ]
    out = []
    for name, s, expected in cases:
        got = s.is_central()
        structural = s.is_central_structural()
        out.append(CheckResult(
            name, got == expected and structural == expected,
            f"{s} central: {got} (structural criterion: {structural}), "
            f"expected {expected}"))
    return out


def run_demo(samples: int = 1000, seed: int = 0) -> dict:
    """The full twisted-series demonstration payload."""
    if samples < 1:
        raise ValueError("samples must be positive")
    ham = hamilton_context()
    biq = biquadratic_context()
    contexts = [
        context_report(ham, samples, seed, expected_dims=(4, 4)),
        context_report(biq, samples, seed + 1, expected_dims=(16, 16)),
    ]
    spot = _hamilton_center_spot_checks(ham)
    payload = {
        "samples": samples,
        "seed": seed,
        "contexts": contexts,
        "center_spot_checks": checks_to_json(spot),
    }
    ok = all(c["pass"] for ctx in contexts for c in ctx["checks"])
    payload["all_pass"] = ok and all_pass(spot)
    return payload
