"""Places of the supported global fields: Q and rational function fields F_p(t).

A place is a rational prime, the real embedding of Q, a monic irreducible
of F_p[t], or the degree valuation at 1/t.  Labels follow the report
conventions: decimal for primes, "inf" for the real place, a polynomial in
t for finite function-field places, "1/t" for the infinite one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import numtheory

KIND_PRIME = "prime"
KIND_REAL = "real"
KIND_FN = "fn"
KIND_FN_INF = "fn-inf"


@dataclass(frozen=True)
class Place:
    kind: str
    p: int = 0
    pi: tuple[int, ...] = field(default=())

    @classmethod
    def rational(cls, p: int) -> "Place":
        if not numtheory.is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls(KIND_PRIME, p)

    @classmethod
    def real(cls) -> "Place":
        return cls(KIND_REAL)

    @classmethod
    def finite(cls, poly) -> "Place":
        """Place of F_p(t) at a monic irreducible (an FpPoly)."""
        from . import funcfield

        if not poly.is_monic or not funcfield.is_irreducible(poly):
            raise ValueError(f"{poly} is not monic irreducible over F_{poly.p}")
        return cls(KIND_FN, poly.p, poly.coeffs)

    @classmethod
    def at_infinity(cls, base_p: int) -> "Place":
        if base_p == 2 or not numtheory.is_prime(base_p):
            raise ValueError("function fields here have odd prime characteristic")
        return cls(KIND_FN_INF, base_p)

    @property
    def is_function_field(self) -> bool:
        return self.kind in (KIND_FN, KIND_FN_INF)

    @property
    def degree(self) -> int:
        """Residue degree over the prime field (1 except for finite fn places)."""
        if self.kind == KIND_FN:
            return len(self.pi) - 1
        return 1

    def residue_size(self) -> int:
        """Size of the residue field, for places with finite residue field."""
        if self.kind == KIND_PRIME:
            return self.p
        if self.kind == KIND_FN:
            return self.p ** self.degree
        if self.kind == KIND_FN_INF:
            return self.p
        raise ValueError("the real place has no finite residue field")

    def modulus(self):
        """The monic irreducible of a finite function-field place, as FpPoly."""
        from . import funcfield

        if self.kind != KIND_FN:
            raise ValueError("only finite function-field places carry a modulus")
        return funcfield.FpPoly(self.p, self.pi)

    def label(self) -> str:
        if self.kind == KIND_PRIME:
            return str(self.p)
        if self.kind == KIND_REAL:
            return "inf"
        if self.kind == KIND_FN_INF:
            return "1/t"
        return str(self.modulus())

    @classmethod
    def parse(cls, text: str, base_char: int) -> "Place":
        """Parse a place label; base_char 0 means Q, else F_p(t)."""
        from . import funcfield

        text = text.strip()
        if base_char == 0:
            if text == "inf":
                return cls.real()
            if not text.isdigit():
                raise ValueError(f"bad place label for Q: {text!r}")
            return cls.rational(int(text))
        if text == "1/t":
            return cls.at_infinity(base_char)
        return cls.finite(funcfield.FpPoly.parse(base_char, text))

    def sort_key(self):
        rank = {KIND_PRIME: 0, KIND_REAL: 1, KIND_FN: 2, KIND_FN_INF: 3}[self.kind]
        return (rank, self.p, len(self.pi), self.pi)

    def __str__(self) -> str:
        return self.label()
