"""Polynomials over F_p, places of F_p(t), residue fields, and diagonal
quadratic forms with residue-form anisotropy tests.

Polynomials are coefficient tuples in ascending degree order with entries
in [0, p); the zero polynomial is the empty tuple.  Factorization is plain
trial division over monic irreducibles enumerated degree by degree, which
is deterministic and entirely adequate at this scale.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

from . import numtheory
from .places import KIND_FN, KIND_FN_INF, Place

_TERM_RE = re.compile(r"^(\d*)\*?(t(?:\^(\d+))?)?$")


@dataclass(frozen=True)
class FpPoly:
    """A polynomial over F_p."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.p < 2 or not numtheory.is_prime(self.p):
            raise ValueError("coefficient modulus must be prime")
        if self.coeffs and (self.coeffs[-1] == 0 or
                            any(not 0 <= c < self.p for c in self.coeffs)):
            raise ValueError("coefficients must be normalized in [0, p)")

    @classmethod
    def make(cls, p: int, coeffs) -> "FpPoly":
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(p, tuple(cs))

    @classmethod
    def const(cls, p: int, c: int) -> "FpPoly":
        return cls.make(p, [c])

    @classmethod
    def t(cls, p: int) -> "FpPoly":
        return cls(p, (0, 1))

    @classmethod
    def parse(cls, p: int, text: str) -> "FpPoly":
        """Parse strings like "t^2+2t+1" (coefficients in [0, p))."""
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty polynomial string")
        coeffs: dict[int, int] = {}
        for term in text.split("+"):
            m = _TERM_RE.fullmatch(term)
            if not m or (not m.group(1) and not m.group(2)):
                raise ValueError(f"bad polynomial term {term!r}")
            coef = int(m.group(1)) if m.group(1) else 1
            if m.group(2) is None:
                deg = 0
            elif m.group(3) is None:
                deg = 1
            else:
                deg = int(m.group(3))
            coeffs[deg] = coeffs.get(deg, 0) + coef
        out = [0] * (max(coeffs) + 1)
        for deg, c in coeffs.items():
            out[deg] = c % p
        return cls.make(p, out)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _same_field(self, other: "FpPoly"):
        if self.p != other.p:
            raise ValueError("mixed coefficient fields")

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._same_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return FpPoly.make(self.p, [x + y for x, y in zip(a, b)])

    def __neg__(self) -> "FpPoly":
        return FpPoly.make(self.p, [-c for c in self.coeffs])

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        self._same_field(other)
        if self.is_zero or other.is_zero:
            return FpPoly(self.p, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly.make(self.p, out)

    def scale(self, c: int) -> "FpPoly":
        return FpPoly.make(self.p, [c * x for x in self.coeffs])

    def __divmod__(self, other: "FpPoly"):
        self._same_field(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return FpPoly(p, ()), self
        inv_lead = pow(other.coeffs[-1], -1, p)
        quo = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            if len(rem) < k + len(other.coeffs):
                continue
            c = rem[k + len(other.coeffs) - 1] * inv_lead % p
            if c:
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = (rem[k + j] - c * b) % p
        return FpPoly.make(p, quo), FpPoly.make(p, rem)

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[1]

    def monic(self) -> "FpPoly":
        if self.is_zero:
            return self
        return self.scale(pow(self.coeffs[-1], -1, self.p))

    def gcd(self, other: "FpPoly") -> "FpPoly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def pow_mod(self, e: int, modulus: "FpPoly") -> "FpPoly":
        result = FpPoly.const(self.p, 1) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = result * base % modulus
            base = base * base % modulus
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        y = 0
        for c in reversed(self.coeffs):
            y = (y * x + c) % self.p
        return y

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for deg in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[deg]
            if not c:
                continue
            if deg == 0:
                terms.append(str(c))
            else:
                var = "t" if deg == 1 else f"t^{deg}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms)


@lru_cache(maxsize=None)
def monic_irreducibles(p: int, deg: int) -> tuple[FpPoly, ...]:
    """All monic irreducibles of exact degree deg over F_p, sorted."""
    if deg < 1:
        return ()
    smaller = [g for d in range(1, deg // 2 + 1) for g in monic_irreducibles(p, d)]
    out = []
    for tail in itertools.product(range(p), repeat=deg):
        f = FpPoly(p, tuple(tail) + (1,))
        if all(not (f % g).is_zero for g in smaller):
            out.append(f)
    return tuple(out)


def is_irreducible(f: FpPoly) -> bool:
    if f.degree < 1:
        return False
    for d in range(1, f.degree // 2 + 1):
        for g in monic_irreducibles(f.p, d):
            if (f % g).is_zero:
                return False
    return True


def factorize(f: FpPoly) -> tuple[int, list[tuple[FpPoly, int]]]:
    """Complete factorization (unit, [(monic irreducible, multiplicity)]).

    The unit times the product of the factors reconstructs f.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    unit = f.coeffs[-1]
    rem = f.monic()
    factors = []
    d = 1
    while rem.degree >= 1:
        if d > rem.degree // 2:
            factors.append((rem, 1))
            break
        for g in monic_irreducibles(f.p, d):
            mult = 0
            while (rem % g).is_zero:
                rem = rem // g
                mult += 1
            if mult:
                factors.append((g, mult))
        d += 1
    return unit, factors


def is_square_in_function_field(f: FpPoly) -> bool:
    """Whether f is a square in F_p(t): even multiplicities and square unit."""
    if f.is_zero:
        raise ValueError("zero has no square class")
    unit, factors = factorize(f)
    if any(mult % 2 for _, mult in factors):
        return False
    return unit == 1 or numtheory.is_square_mod(unit, f.p)


# ---------------------------------------------------------------------------
# valuations and residues


def place_valuation(f, v: Place) -> int:
    """Valuation at a function-field place.

    f may be an FpPoly or a (numerator, denominator) pair of FpPoly.
    """
    if isinstance(f, tuple):
        num, den = f
        return place_valuation(num, v) - place_valuation(den, v)
    if f.is_zero:
        raise ValueError("the zero element has valuation infinity")
    if v.kind == KIND_FN_INF:
        return -f.degree
    if v.kind != KIND_FN:
        raise ValueError(f"{v} is not a function-field place")
    pi = v.modulus()
    val = 0
    while True:
        quo, rem = divmod(f, pi)
        if not rem.is_zero:
            return val
        f = quo
        val += 1


class ResidueField:
    """The residue field F_p[t]/(pi) of a finite place of F_p(t)."""

    def __init__(self, place: Place):
        if place.kind != KIND_FN:
            raise ValueError("residue fields are attached to finite places")
        self.place = place
        self.p = place.p
        self.modulus = place.modulus()
        self.degree = place.degree
        self.size = self.p ** self.degree

    def __eq__(self, other):
        return isinstance(other, ResidueField) and self.place == other.place

    def __hash__(self):
        return hash(self.place)

    def make(self, value) -> "ResidueElem":
        if isinstance(value, ResidueElem):
            if value.field != self:
                raise ValueError("element of a different residue field")
            return value
        if isinstance(value, int):
            value = FpPoly.const(self.p, value)
        return ResidueElem(self, value % self.modulus)

    def one(self) -> "ResidueElem":
        return self.make(1)

    def zero(self) -> "ResidueElem":
        return self.make(0)

    def elements(self):
        for coeffs in itertools.product(range(self.p), repeat=self.degree):
            yield self.make(FpPoly.make(self.p, coeffs))

    def __repr__(self):
        return f"F_{self.p}^{self.degree} (mod {self.modulus})"


@dataclass(frozen=True)
class ResidueElem:
    field: ResidueField
    value: FpPoly

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero

    def __add__(self, other: "ResidueElem") -> "ResidueElem":
        return ResidueElem(self.field, (self.value + other.value) % self.field.modulus)

    def __neg__(self) -> "ResidueElem":
        return ResidueElem(self.field, (-self.value) % self.field.modulus)

    def __mul__(self, other: "ResidueElem") -> "ResidueElem":
        return ResidueElem(self.field, self.value * other.value % self.field.modulus)

    def is_square(self) -> bool:
        """Euler criterion in F_{p^d}; zero is rejected."""
        if self.is_zero:
            raise ValueError("zero is neither square class")
        power = self.value.pow_mod((self.field.size - 1) // 2, self.field.modulus)
        return power == FpPoly.const(self.field.p, 1)

    def __str__(self):
        return str(self.value)


def residue_at(f: FpPoly, v: Place) -> ResidueElem:
    """Image of a valuation-zero polynomial in the residue field at v."""
    if place_valuation(f, v) != 0:
        raise ValueError(f"{f} has nonzero valuation at {v}")
    return ResidueField(v).make(f)


# ---------------------------------------------------------------------------
# diagonal quadratic forms


@dataclass(frozen=True)
class DiagForm:
    """A diagonal quadratic form <d_1, ..., d_n>.

    Entries are nonzero FpPoly (a form over F_p(t)) or nonzero ResidueElem
    (a form over a residue field F_{p^d}).  Residue parts of a Springer
    split may be empty.
    """

    entries: tuple

    def __post_init__(self):
        kinds = {type(e) for e in self.entries}
        if len(kinds) > 1:
            raise ValueError("mixed entry types in a diagonal form")
        if any(e.is_zero for e in self.entries):
            raise ValueError("diagonal forms have no zero entries")

    @classmethod
    def over_function_field(cls, p: int, entries) -> "DiagForm":
        polys = tuple(e if isinstance(e, FpPoly) else FpPoly.parse(p, e) for e in entries)
        if not polys:
            raise ValueError("a form needs at least one entry")
        if any(f.p != p for f in polys):
            raise ValueError("mixed coefficient fields")
        return cls(polys)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __str__(self):
        return "<" + ", ".join(str(e) for e in self.entries) + ">"


def springer_split(q: DiagForm, v: Place) -> tuple[DiagForm, DiagForm]:
    """Residue forms of q at a finite place, after square-class normalization.

    Entries of even valuation contribute to the first residue form, entries
    pi * unit to the second; isometry allows square factors, so only the
    valuation parity matters.
    """
    pi = v.modulus()
    first, second = [], []
    for entry in q.entries:
        if not isinstance(entry, FpPoly):
            raise ValueError("springer split applies to forms over F_p(t)")
        val = place_valuation(entry, v)
        unit_part = entry
        for _ in range(val):
            unit_part = unit_part // pi
        target = first if val % 2 == 0 else second
        target.append(residue_at(unit_part, v))
    return DiagForm(tuple(first)), DiagForm(tuple(second))


def is_isotropic_finite(q: DiagForm):
    """Isotropy of a diagonal form over a finite field, with witness.

    dim 1 is anisotropic; dim 2 is isotropic iff -d1*d2 is a square; dim >= 3
    is always isotropic (Chevalley-Warning) and a witness is found by a
    deterministic bounded search.  Returns (isotropic, witness_or_None).
    """
    if q.dim == 0:
        return False, None
    field = q.entries[0].field
    if q.dim == 1:
        return False, None
    if q.dim == 2:
        d1, d2 = q.entries
        if not (-(d1 * d2)).is_square():
            return False, None
        # find x with d1 x^2 = -d2 (exists since -d1 d2 is a square)
        for x in field.elements():
            if x.is_zero:
                continue
            if (d1 * x * x + d2).is_zero:
                return True, (x, field.one()) + (field.zero(),) * (q.dim - 2)
        raise AssertionError("square class said isotropic but no witness found")
    # dim >= 3: solve d1 x^2 + d2 y^2 = -d3 over the residue field
    d1, d2, d3 = q.entries[0], q.entries[1], q.entries[2]
    for x in field.elements():
        lhs = d1 * x * x + d3
        for y in field.elements():
            if (lhs + d2 * y * y).is_zero:
                if x.is_zero and y.is_zero:
                    continue
                witness = (x, y, field.one()) + (field.zero(),) * (q.dim - 3)
                return True, witness
    raise AssertionError("Chevalley-Warning guarantees a zero in dim >= 3")


def anisotropic_at(q: DiagForm, v: Place) -> bool:
    """Anisotropy of q over the completion at v, by residue forms.

    Over a complete discretely valued field with odd residue characteristic
    a form is anisotropic iff both residue forms are; anisotropy at one
    completion forces anisotropy over F_p(t) itself.
    """
    first, second = springer_split(q, v)
    for part in (first, second):
        if part.dim and is_isotropic_finite(part)[0]:
            return False
    return True


def constant_isotropy_vector(q: DiagForm):
    """A nonzero constant vector on which q vanishes identically, if any.

    Searches c in F_p^dim with sum d_i c_i^2 = 0 as a polynomial; such a
    zero persists over F_p(t) and over every completion.
    """
    p = q.entries[0].p
    zero = FpPoly(p, ())
    for c in itertools.product(range(p), repeat=q.dim):
        if not any(c):
            continue
        total = zero
        for ci, di in zip(c, q.entries):
            if ci:
                total = total + di.scale(ci * ci)
        if total.is_zero:
            return c
    return None


@dataclass(frozen=True)
class NonIsometryCertificate:
    """Proof that two diagonal forms over F_p(t) are not isometric.

    One form is anisotropic at `place` (both residue forms anisotropic)
    while the other vanishes on a constant vector; isometric forms share
    isotropy behavior over every completion.
    """

    anisotropic_form: int
    place: Place
    isotropic_form: int
    isotropy_vector: tuple[int, ...]

    def to_json(self):
        return {
            "anisotropic_form": self.anisotropic_form,
            "anisotropic_at": self.place.label(),
            "isotropic_form": self.isotropic_form,
            "isotropy_vector": list(self.isotropy_vector),
        }


def candidate_places(q: DiagForm) -> list[Place]:
    """Finite places at the irreducible factors of the entries, sorted."""
    seen = set()
    for entry in q.entries:
        for g, _ in factorize(entry)[1]:
            seen.add(g)
    places = [Place.finite(g) for g in sorted(seen, key=lambda g: (g.degree, g.coeffs))]
    return places


def not_isometric_certificate(q1: DiagForm, q2: DiagForm):
    """Certificate that q1 and q2 are not isometric, or None if inconclusive.

    Only the one-completion direction of local-global reasoning is used, so
    None means "not decided", never "isometric".
    """
    if q1.dim != q2.dim:
        raise ValueError("forms of different dimension are never isometric")
    for aniso_idx, (qa, qb) in ((0, (q1, q2)), (1, (q2, q1))):
        vec = constant_isotropy_vector(qb)
        if vec is None:
            continue
        for v in candidate_places(qa):
            if anisotropic_at(qa, v):
                return NonIsometryCertificate(aniso_idx, v, 1 - aniso_idx, vec)
    return None
