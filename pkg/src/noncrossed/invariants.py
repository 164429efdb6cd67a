"""Local invariant profiles of division algebras over global fields.

A profile is a finitely supported assignment place -> Q/Z class.  Profiles
summing to zero (real entries in (1/2)Z/Z) are exactly those realized by a
central division algebra, whose degree is the LCM of the invariant orders.
Base change multiplies each invariant by the local degree e*f, which turns
subfield containment into an LCM computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .places import KIND_FN, KIND_FN_INF, KIND_PRIME, KIND_REAL, Place
from .qz import QZ, lcm_list, qz_sum
from .reporting import CheckResult

HALF = QZ(1, 2)


@dataclass(frozen=True)
class BaseField:
    """Q (char 0) or the rational function field F_p(t) (char p odd)."""

    char: int = 0

    @classmethod
    def rationals(cls) -> "BaseField":
        return cls(0)

    @classmethod
    def function_field(cls, p: int) -> "BaseField":
        if p == 2:
            raise ValueError("only odd characteristic function fields are supported")
        return cls(p)

    @property
    def is_rationals(self) -> bool:
        return self.char == 0

    def admits(self, place: Place) -> bool:
        if self.is_rationals:
            return place.kind in (KIND_PRIME, KIND_REAL)
        return place.kind in (KIND_FN, KIND_FN_INF) and place.p == self.char

    def to_json(self):
        return "Q" if self.is_rationals else {"Fp_t": self.char}

    def __str__(self):
        return "Q" if self.is_rationals else f"F_{self.char}(t)"


@dataclass(frozen=True)
class InvariantProfile:
    """Finitely supported map place -> Q/Z class; zero classes never stored."""

    base: BaseField
    entries: tuple[tuple[Place, QZ], ...]

    @classmethod
    def make(cls, base: BaseField, entries: Mapping[Place, QZ]) -> "InvariantProfile":
        items = []
        for place, inv in entries.items():
            if not base.admits(place):
                raise ValueError(f"place {place} does not belong to {base}")
            inv = QZ.make(inv)
            if not inv.is_zero:
                items.append((place, inv))
        items.sort(key=lambda kv: kv[0].sort_key())
        return cls(base, tuple(items))

    def invariant_at(self, place: Place) -> QZ:
        for v, inv in self.entries:
            if v == place:
                return inv
        return QZ(0, 1)

    @property
    def places(self) -> tuple[Place, ...]:
        return tuple(v for v, _ in self.entries)

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "entries": [{"place": v.label(), "inv": str(inv)} for v, inv in self.entries],
        }

    @classmethod
    def from_json(cls, obj) -> "InvariantProfile":
        if not isinstance(obj, dict) or "base" not in obj or "entries" not in obj:
            raise ValueError("profile object needs 'base' and 'entries' fields")
        base_obj = obj["base"]
        if base_obj == "Q":
            base = BaseField.rationals()
        elif isinstance(base_obj, dict) and "Fp_t" in base_obj:
            base = BaseField.function_field(int(base_obj["Fp_t"]))
        else:
            raise ValueError(f"bad base field tag {base_obj!r}")
        entries = {}
        if not isinstance(obj["entries"], list):
            raise ValueError("'entries' must be a list")
        for i, item in enumerate(obj["entries"]):
            try:
                place = Place.parse(item["place"], base.char)
                inv = QZ.make(item["inv"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"bad profile entry at index {i}: {exc}") from exc
            if place in entries:
                raise ValueError(f"duplicate place {place} at entry {i}")
            entries[place] = inv
        return cls.make(base, entries)


def profile_violations(profile: InvariantProfile) -> list[str]:
    """Reasons the profile is not realized by a central division algebra."""
    problems = []
    total = qz_sum(inv for _, inv in profile.entries)
    if not total.is_zero:
        problems.append(f"invariants sum to {total}, not 0, in Q/Z")
    for place, inv in profile.entries:
        if place.kind == KIND_REAL and inv != HALF:
            problems.append(f"real invariant {inv} is not in (1/2)Z/Z")
    return problems


def profile_is_valid(profile: InvariantProfile) -> bool:
    return not profile_violations(profile)


def profile_degree(profile: InvariantProfile) -> int:
    """Degree of the division algebra realizing the profile (1 if empty)."""
    problems = profile_violations(profile)
    if problems:
        raise ValueError("; ".join(problems))
    if not profile.entries:
        return 1
    return lcm_list([inv.order for _, inv in profile.entries])


@dataclass(frozen=True)
class LocalExtensionData:
    """Local degrees of a degree-k extension above each relevant base place.

    For each listed place the (e, f) pairs of the places above it satisfy
    sum(e*f) = k; places that are not listed must carry invariant zero.
    """

    base_degree: int
    above: tuple[tuple[Place, tuple[tuple[int, int], ...]], ...]

    @classmethod
    def make(cls, base_degree: int,
             above: Mapping[Place, Iterable[tuple[int, int]]]) -> "LocalExtensionData":
        if base_degree < 1:
            raise ValueError("extension degree must be positive")
        items = []
        for place, efs in above.items():
            efs = tuple((int(e), int(f)) for e, f in efs)
            if not efs or any(e < 1 or f < 1 for e, f in efs):
                raise ValueError(f"local degrees above {place} must be positive")
            if sum(e * f for e, f in efs) != base_degree:
                raise ValueError(
                    f"local degrees above {place} sum to "
                    f"{sum(e * f for e, f in efs)}, expected {base_degree}")
            items.append((place, efs))
        items.sort(key=lambda kv: kv[0].sort_key())
        return cls(base_degree, tuple(items))

    def pairs_above(self, place: Place):
        for v, efs in self.above:
            if v == place:
                return efs
        return None

    def to_json(self) -> dict:
        return {
            "base_degree": self.base_degree,
            "places": [{"place": v.label(), "above": [[e, f] for e, f in efs]}
                       for v, efs in self.above],
        }

    @classmethod
    def from_json(cls, obj, base: BaseField) -> "LocalExtensionData":
        try:
            k = int(obj["base_degree"])
            above = {}
            for item in obj["places"]:
                place = Place.parse(item["place"], base.char)
                above[place] = [(int(e), int(f)) for e, f in item["above"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"bad extension data: {exc}") from exc
        return cls.make(k, above)


def extend_profile(profile: InvariantProfile,
                   ext: LocalExtensionData) -> dict[tuple[Place, int], QZ]:
    """Invariants after base change, keyed by (base place, index above).

    Each place w above v of local degree e*f carries e*f times the base
    invariant.  Every place with nonzero invariant must be covered.
    """
    out: dict[tuple[Place, int], QZ] = {}
    for place, inv in profile.entries:
        efs = ext.pairs_above(place)
        if efs is None:
            raise ValueError(f"extension data does not cover place {place} "
                             f"with nonzero invariant {inv}")
        for idx, (e, f) in enumerate(efs):
            out[(place, idx)] = inv.scale(e * f)
    return out


@dataclass(frozen=True)
class ContainmentVerdict:
    contained: bool
    lcm_of_orders: int
    extended: dict

    def to_json(self) -> dict:
        return {
            "contained": self.contained,
            "lcm_of_orders": self.lcm_of_orders,
            "extended": [{"place": place.label(), "index": idx, "inv": str(inv)}
                         for (place, idx), inv in sorted(
                             self.extended.items(),
                             key=lambda kv: (kv[0][0].sort_key(), kv[0][1]))],
        }


def contains_subfield(profile: InvariantProfile, ext: LocalExtensionData,
                      k: int) -> ContainmentVerdict:
    """Whether a degree-k extension with these local degrees embeds.

    The extension embeds iff the LCM of the orders of the base-changed
    invariants is n/k, for n the degree of the algebra.
    """
    n = profile_degree(profile)
    if n % k != 0:
        raise ValueError(f"subfield degree {k} does not divide algebra degree {n}")
    if ext.base_degree != k:
        raise ValueError(f"extension data has degree {ext.base_degree}, expected {k}")
    extended = extend_profile(profile, ext)
    orders = [inv.order for inv in extended.values()]
    lcm = lcm_list(orders) if orders else 1
    return ContainmentVerdict(lcm == n // k, lcm, extended)


def certify_division_algebra(profile: InvariantProfile, v1: Place, v2: Place,
                             ext: LocalExtensionData, n: int, k: int) -> list[CheckResult]:
    """Full hypothesis report for the invariant-profile construction.

    Checks that the profile is realized by a central division algebra of
    degree n = k*m containing a degree-k subfield to which v1 and v2 extend
    uniquely, with the two distinguished completions division algebras.
    The order-divides-m condition applies to the places outside {v1, v2}:
    the distinguished places carry order n = km instead.
    """
    if n % k != 0:
        raise ValueError(f"{k} does not divide {n}")
    m = n // k
    checks = []

    total = qz_sum(inv for _, inv in profile.entries)
    checks.append(CheckResult(
        "sum-zero", total.is_zero,
        f"invariants sum to {total} in Q/Z (Hasse-Brauer-Noether existence needs 0)"))

    real_ok = all(inv == HALF for place, inv in profile.entries
                  if place.kind == KIND_REAL)
    if profile.base.is_rationals:
        checks.append(CheckResult(
            "real-invariants", real_ok,
            "real-place invariants lie in (1/2)Z/Z"))

    for label, place in (("v1", v1), ("v2", v2)):
        inv = profile.invariant_at(place)
        checks.append(CheckResult(
            f"order-n-at-{label}", inv.order == n,
            f"invariant {inv} at {place} has order {inv.order}, required {n}"))

    others_ok = True
    details = []
    for place, inv in profile.entries:
        if place in (v1, v2):
            continue
        if m % inv.order != 0:
            others_ok = False
            details.append(f"{place} has order {inv.order}")
    checks.append(CheckResult(
        "other-orders-divide-m", others_ok,
        "orders away from the distinguished places divide "
        f"m = {m}" + ("" if others_ok else "; violated at " + ", ".join(details))))

    checks.append(CheckResult(
        "finite-support", True,
        f"profile supported on {len(profile.entries)} places"))

    for label, place in (("v1", v1), ("v2", v2)):
        efs = ext.pairs_above(place)
        unique = efs is not None and len(efs) == 1
        checks.append(CheckResult(
            f"unique-extension-{label}", unique,
            f"{place} has {'one place' if unique else 'not exactly one place'} above it"))

    degree_ok = False
    try:
        degree_ok = profile_degree(profile) == n
        degree_detail = f"LCM of invariant orders is {profile_degree(profile)}, required {n}"
    except ValueError as exc:
        degree_detail = f"profile invalid: {exc}"
    checks.append(CheckResult("profile-degree", degree_ok, degree_detail))

    try:
        verdict = contains_subfield(profile, ext, k)
        checks.append(CheckResult(
            "contains-subfield", verdict.contained,
            f"LCM of base-changed invariant orders is {verdict.lcm_of_orders}, "
            f"required {m} for a degree-{k} subfield to embed"))
    except ValueError as exc:
        checks.append(CheckResult("contains-subfield", False, str(exc)))

    for label, place in (("v1", v1), ("v2", v2)):
        order = profile.invariant_at(place).order
        checks.append(CheckResult(
            f"valuation-extends-{label}", order == n,
            f"completion at {place} is a division algebra (invariant order {order} "
            f"= degree), so the valuation extends"))

    return checks
