"""The degree-8 witness pipeline over F_p(t), p = 3 mod 8.

The shipped family is K = F_p(t)(sqrt t, sqrt((t+1)(t+2))) with the t-adic
and (t+1)-adic valuations.  p = 3 mod 8 makes 2 and -1 nonsquares mod p,
which is exactly what the inertia claims and the residue-form anisotropy
rest on.  The profile {v_t: 3/8, v_{t+1}: 5/8} certifies a division
algebra of degree 8 containing K (base change by the local degree 4 sends
both invariants to 1/2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import funcfield, numtheory
from .funcfield import DiagForm, FpPoly, NonIsometryCertificate
from .invariants import (BaseField, InvariantProfile, LocalExtensionData,
                         certify_division_algebra, contains_subfield)
from .places import Place
from .qz import QZ
from .reporting import CheckResult, all_pass, checks_to_json


class QuadBehavior(enum.Enum):
    RAMIFIED = "ramified"
    INERT = "inert"
    SPLIT = "split"


def quadratic_behavior(d: FpPoly, v: Place) -> QuadBehavior:
    """Behavior of v in F_p(t)(sqrt d).

    Odd valuation of d: ramified.  Even valuation: inert or split according
    to whether the residue of the unit part is a nonsquare or a square.
    """
    if funcfield.is_square_in_function_field(d):
        raise ValueError(f"{d} is a square, so sqrt(d) generates no extension")
    val = funcfield.place_valuation(d, v)
    if val % 2 == 1:
        return QuadBehavior.RAMIFIED
    unit_part = d
    pi = v.modulus()
    for _ in range(val):
        unit_part = unit_part // pi
    if funcfield.residue_at(unit_part, v).is_square():
        return QuadBehavior.SPLIT
    return QuadBehavior.INERT


_SUBFIELD_LABELS = ("sqrt-a", "sqrt-b", "sqrt-ab")


def _require_biquadratic(a: FpPoly, b: FpPoly):
    for d, label in ((a, "a"), (b, "b"), (a * b, "ab")):
        if funcfield.is_square_in_function_field(d):
            raise ValueError(f"{label} = {d} is a square: K is not biquadratic")


def subfield_behaviors(a: FpPoly, b: FpPoly, v: Place) -> dict[str, QuadBehavior]:
    _require_biquadratic(a, b)
    return {
        "sqrt-a": quadratic_behavior(a, v),
        "sqrt-b": quadratic_behavior(b, v),
        "sqrt-ab": quadratic_behavior(a * b, v),
    }


def inertia_subfield(a: FpPoly, b: FpPoly, v: Place) -> str:
    """Which quadratic subfield of F(sqrt a, sqrt b) is the inertia field at v.

    Returns one of "sqrt-a", "sqrt-b", "sqrt-ab", or "all" when v is
    unramified in K (no ramified subfield), or "none" when no subfield is
    inert.
    """
    behaviors = subfield_behaviors(a, b, v)
    if all(bh != QuadBehavior.RAMIFIED for bh in behaviors.values()):
        return "all"
    inert = [lab for lab in _SUBFIELD_LABELS if behaviors[lab] == QuadBehavior.INERT]
    if len(inert) == 1:
        return inert[0]
    return "none"


def unique_quartic_extension(a: FpPoly, b: FpPoly, v: Place) -> tuple[bool, tuple[int, int]]:
    """Whether v extends uniquely to K = F(sqrt a, sqrt b), with its (e, f).

    Unique with local degree 4 exactly when one subfield is inert and the
    others ramified: then e = f = 2 and there is a single place above v.
    """
    behaviors = subfield_behaviors(a, b, v)
    ram = sum(1 for bh in behaviors.values() if bh == QuadBehavior.RAMIFIED)
    inert = sum(1 for bh in behaviors.values() if bh == QuadBehavior.INERT)
    e = 2 if ram else 1
    f = 2 if inert else 1
    return (ram == 2 and inert == 1), (e, f)


def deg8_hypothesis_checks(p: int, a: FpPoly, b: FpPoly, v1: Place,
                           v2: Place) -> tuple[list[CheckResult], NonIsometryCertificate | None]:
    """Inertia, residue-size, and form non-isometry conditions."""
    checks = []
    checks.append(CheckResult(
        "nondyadic", p % 2 == 1,
        f"places of F_{p}(t) with p odd are nondyadic"))

    square_free = True
    try:
        _require_biquadratic(a, b)
    except ValueError:
        square_free = False
    checks.append(CheckResult(
        "independent-square-classes", square_free,
        f"a = {a}, b = {b}, ab = {a * b} are all nonsquares in F_{p}(t)"))
    if not square_free:
        return checks, None

    inertia1 = inertia_subfield(a, b, v1)
    inertia2 = inertia_subfield(a, b, v2)
    distinct = (inertia1 != inertia2 and inertia1 in _SUBFIELD_LABELS
                and inertia2 in _SUBFIELD_LABELS)
    checks.append(CheckResult(
        "distinct-inertia-fields", distinct,
        f"inertia field at {v1} is {inertia1}, at {v2} is {inertia2}; "
        "two distinct quadratic subfields required"))

    for label, v in (("v1", v1), ("v2", v2)):
        size = v.residue_size()
        checks.append(CheckResult(
            f"residue-size-{label}-mod-4", size % 4 != 1,
            f"|residue field at {v}| = {size} is {size % 4} mod 4, required != 1"))

    form = DiagForm((a, b, a * b))
    ones = DiagForm((FpPoly.const(p, 1),) * 3)
    certificate = funcfield.not_isometric_certificate(form, ones)
    checks.append(CheckResult(
        "form-non-isometry", certificate is not None,
        f"<a, b, ab> = {form} is not isometric to <1, 1, 1>"
        + ("" if certificate is None else
           f": anisotropic at {certificate.place} while <1,1,1> vanishes on "
           f"{certificate.isotropy_vector}")))
    return checks, certificate


@dataclass(frozen=True)
class Deg8Witness:
    """Certificate data for the degree-8 construction."""

    p: int
    a: FpPoly
    b: FpPoly
    v1: Place
    v2: Place
    profile: InvariantProfile
    extension: LocalExtensionData
    checks: tuple[CheckResult, ...]
    certificate: NonIsometryCertificate | None
    conclusion: str

    @property
    def all_pass(self) -> bool:
        return all_pass(self.checks)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "a": str(self.a),
            "b": str(self.b),
            "v1": self.v1.label(),
            "v2": self.v2.label(),
            "profile": self.profile.to_json(),
            "extension": self.extension.to_json(),
            "checks": checks_to_json(self.checks),
            "non_isometry_certificate": (None if self.certificate is None
                                         else self.certificate.to_json()),
            "conclusion": self.conclusion,
        }


def build_deg8_witness(p: int) -> Deg8Witness:
    """Assemble and verify the default degree-8 witness for p = 3 mod 8."""
    if not numtheory.is_prime(p) or p % 8 != 3:
        raise ValueError(f"p must be a prime congruent to 3 mod 8, got {p}")
    t = FpPoly.t(p)
    a = t
    b = (t + FpPoly.const(p, 1)) * (t + FpPoly.const(p, 2))
    v1 = Place.finite(t)
    v2 = Place.finite(t + FpPoly.const(p, 1))

    profile = InvariantProfile.make(BaseField.function_field(p), {
        v1: QZ(3, 8),
        v2: QZ(5, 8),
    })

    ext_pairs = {}
    checks = []
    for label, v in (("v1", v1), ("v2", v2)):
        unique, (e, f) = unique_quartic_extension(a, b, v)
        checks.append(CheckResult(
            f"unique-quartic-extension-{label}", unique,
            f"{v} extends uniquely to K with (e, f) = ({e}, {f})"))
        ext_pairs[v] = [(e, f)] * (4 // (e * f))
    extension = LocalExtensionData.make(4, ext_pairs)

    checks += certify_division_algebra(profile, v1, v2, extension, n=8, k=4)
    hyp_checks, certificate = deg8_hypothesis_checks(p, a, b, v1, v2)
    checks += hyp_checks

    verdict = contains_subfield(profile, extension, 4)
    checks.append(CheckResult(
        "containment-lcm", verdict.lcm_of_orders == 2,
        f"LCM of base-changed invariant orders is {verdict.lcm_of_orders}, "
        "expected 2"))
    halves = all(inv == QZ(1, 2) for inv in verdict.extended.values())
    checks.append(CheckResult(
        "extended-invariants-one-half", halves,
        "both base-changed invariants equal 1/2"))

    conclusion = (f"noncrossed product division algebra of degree 8: "
                  f"C_A(K)((ZxZ)) for K = F_{p}(t)(sqrt({a}), sqrt({b})) "
                  "and the certified invariant profile")
    return Deg8Witness(p, a, b, v1, v2, profile, extension, tuple(checks),
                       certificate, conclusion)
