"""Exact arithmetic in Q/Z, the value group of local invariants.

Every class is kept in the unique reduced representative num/den with
0 <= num < den and gcd(num, den) = 1; zero is canonically 0/1, so
structural equality is semantic equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

QZLike = Union["QZ", Fraction, int, str]


@dataclass(frozen=True)
class QZ:
    """A residue class num/den + Z in reduced form."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 1:
            raise ValueError("denominator must be positive")
        if not 0 <= self.num < self.den and not (self.num == 0 and self.den == 1):
            raise ValueError(f"{self.num}/{self.den} is not a reduced mod-Z representative")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not in lowest terms")

    @classmethod
    def make(cls, value: QZLike) -> "QZ":
        """Reduce an exact rational (or 'num/den' string) modulo Z."""
        if isinstance(value, QZ):
            return value
        if isinstance(value, str):
            value = Fraction(value)
        frac = Fraction(value)
        num = frac.numerator % frac.denominator
        if num == 0:
            return cls(0, 1)
        # num % den keeps gcd(num, den) = 1, so the result is already reduced
        return cls(num, frac.denominator)

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    @property
    def order(self) -> int:
        """Smallest k >= 1 with k*self = 0 in Q/Z; equals den when reduced."""
        return self.den

    def scale(self, k: int) -> "QZ":
        """The class of k*self, reduced."""
        return QZ.make(Fraction(k * self.num, self.den))

    def __add__(self, other: "QZ") -> "QZ":
        return QZ.make(Fraction(self.num, self.den) + Fraction(other.num, other.den))

    def __neg__(self) -> "QZ":
        if self.num == 0:
            return self
        return QZ(self.den - self.num, self.den)

    def __sub__(self, other: "QZ") -> "QZ":
        return self + (-other)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


QZ_ZERO = QZ(0, 1)


def qz_sum(classes: Iterable[QZ]) -> QZ:
    total = QZ_ZERO
    for c in classes:
        total = total + c
    return total


def lcm_list(ks: Iterable[int]) -> int:
    """LCM of a nonempty list of positive integers."""
    ks = list(ks)
    if not ks:
        raise ValueError("lcm of an empty list is undefined")
    if any(k < 1 for k in ks):
        raise ValueError("lcm arguments must be positive")
    return math.lcm(*ks)
