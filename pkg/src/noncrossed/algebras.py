"""Finite-dimensional algebras over Q given by structure constants.

Everything is exact: element coordinate vectors are integer tuples over a
common positive denominator (a plain rational vector, normalized so the
gcd of all numerators and the denominator is 1), and linear problems go
through the fraction-free solver.  Multiplication tables are stored
sparsely; for the quaternion-style algebras used here every basis product
is a single scaled basis vector, which keeps products cheap.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import linalg


class AlgebraError(ValueError):
    pass


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for v in nums:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        den //= g
        nums = [v // g for v in nums]
    return tuple(nums), den


class AlgElement:
    """Coordinate vector in a structure-constant algebra."""

    __slots__ = ("alg", "num", "den")

    def __init__(self, alg: "StructAlgebra", num: tuple[int, ...], den: int):
        self.alg = alg
        self.num = num
        self.den = den

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.num)

    @property
    def is_zero(self) -> bool:
        return not any(self.num)

    def __add__(self, other: "AlgElement") -> "AlgElement":
        self.alg._check(other)
        d = lcm(self.den, other.den)
        a, b = d // self.den, d // other.den
        nums, den = _normalize([a * x + b * y for x, y in zip(self.num, other.num)], d)
        return AlgElement(self.alg, nums, den)

    def __neg__(self) -> "AlgElement":
        return AlgElement(self.alg, tuple(-v for v in self.num), self.den)

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        return self + (-other)

    def __mul__(self, other) -> "AlgElement":
        if isinstance(other, AlgElement):
            return self.alg.mul(self, other)
        return self.scaled(other)

    def __rmul__(self, other) -> "AlgElement":
        return self.scaled(other)

    def scaled(self, scalar) -> "AlgElement":
        frac = Fraction(scalar)
        nums, den = _normalize([frac.numerator * v for v in self.num],
                               self.den * frac.denominator)
        return AlgElement(self.alg, nums, den)

    def inverse(self) -> "AlgElement":
        inv = self.alg.inverse(self)
        if inv is None:
            raise AlgebraError(f"{self} is not invertible")
        return inv

    def __eq__(self, other):
        return (isinstance(other, AlgElement) and self.alg is other.alg
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((id(self.alg), self.num, self.den))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, v in enumerate(self.num):
            if not v:
                continue
            c = Fraction(v, self.den)
            name = self.alg.basis_names[i]
            if name == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


class StructAlgebra:
    """Associative unital algebra e_i e_j = sum_k c[i][j][k] e_k over Q.

    Associativity is verified on basis triples at construction (exhaustive
    up to dim 16, seeded samples beyond) and the unit is checked two-sided.
    """

    def __init__(self, table, basis_names=None, unit_index: int = 0,
                 check: bool = True):
        dim = len(table)
        self.dim = dim
        self.basis_names = tuple(basis_names) if basis_names else tuple(
            f"e{i}" for i in range(dim))
        if len(self.basis_names) != dim:
            raise AlgebraError("need one name per basis vector")
        # common-denominator sparse table: _table[i][j] = ((k, int_num), ...)
        fracs = [[[Fraction(c) for c in cell] for cell in row] for row in table]
        cden = 1
        for row in fracs:
            for cell in row:
                for c in cell:
                    cden = lcm(cden, c.denominator)
        self._cden = cden
        self._table = tuple(
            tuple(tuple((k, int(c * cden)) for k, c in enumerate(cell) if c)
                  for cell in row)
            for row in fracs)
        self.one = self.basis_element(unit_index)
        self.zero = AlgElement(self, (0,) * dim, 1)
        if check:
            self._verify_unit()
            self._verify_associativity()

    def _check(self, x: AlgElement):
        if x.alg is not self:
            raise AlgebraError("elements of different algebras")

    def basis_element(self, i: int) -> AlgElement:
        num = [0] * self.dim
        num[i] = 1
        return AlgElement(self, tuple(num), 1)

    def element(self, coeffs) -> AlgElement:
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) != self.dim:
            raise AlgebraError(f"need {self.dim} coordinates")
        den = lcm(*(f.denominator for f in fracs)) if fracs else 1
        nums, den = _normalize([int(f * den) for f in fracs], den)
        return AlgElement(self, nums, den)

    def scalar(self, value) -> AlgElement:
        return self.one.scaled(value)

    def mul(self, x: AlgElement, y: AlgElement) -> AlgElement:
        self._check(x)
        self._check(y)
        out = [0] * self.dim
        table = self._table
        ys = [(j, v) for j, v in enumerate(y.num) if v]
        for i, xv in enumerate(x.num):
            if not xv:
                continue
            row = table[i]
            for j, yv in ys:
                w = xv * yv
                for k, c in row[j]:
                    out[k] += w * c
        nums, den = _normalize(out, x.den * y.den * self._cden)
        return AlgElement(self, nums, den)

    def _basis_mul(self, i: int, j: int) -> AlgElement:
        out = [0] * self.dim
        for k, c in self._table[i][j]:
            out[k] = c
        nums, den = _normalize(out, self._cden)
        return AlgElement(self, nums, den)

    def _verify_unit(self):
        for i in range(self.dim):
            e = self.basis_element(i)
            if self.mul(self.one, e) != e or self.mul(e, self.one) != e:
                raise AlgebraError("designated unit is not a two-sided unit")

    def _verify_associativity(self):
        if self.dim <= 16:
            triples = ((i, j, k) for i in range(self.dim)
                       for j in range(self.dim) for k in range(self.dim))
        else:
            import random

            rng = random.Random(0)
            triples = (tuple(rng.randrange(self.dim) for _ in range(3))
                       for _ in range(4096))
        for i, j, k in triples:
            ei, ej, ek = (self.basis_element(x) for x in (i, j, k))
            left = self.mul(self.mul(ei, ej), ek)
            right = self.mul(ei, self.mul(ej, ek))
            if left != right:
                raise AlgebraError(
                    f"structure constants are not associative at ({i},{j},{k})")

    def left_mult_rows(self, x: AlgElement):
        """Rows of the matrix of y -> x*y in basis coordinates (Fractions)."""
        cols = [self.mul(x, self.basis_element(j)) for j in range(self.dim)]
        return [[col.coeffs[k] for col in cols] for k in range(self.dim)]

    def right_mult_rows(self, x: AlgElement):
        cols = [self.mul(self.basis_element(j), x) for j in range(self.dim)]
        return [[col.coeffs[k] for col in cols] for k in range(self.dim)]

    def inverse(self, x: AlgElement):
        """Two-sided inverse of x, or None."""
        self._check(x)
        sol = linalg.solve(self.left_mult_rows(x), self.one.coeffs)
        if sol is None:
            return None
        y = self.element(sol)
        if self.mul(x, y) != self.one or self.mul(y, x) != self.one:
            return None
        return y

    def __repr__(self):
        return f"StructAlgebra(dim={self.dim})"


# ---------------------------------------------------------------------------
# constructors


def quaternion(a, b) -> tuple[StructAlgebra, "SubfieldSpec"]:
    """The quaternion algebra (a, b): i^2 = a, j^2 = b, ij = -ji = k.

    Returns the algebra and the subfield spec for F(sqrt a) = span{1, i}
    with the conjugation generator i -> -i.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise AlgebraError("quaternion parameters must be nonzero")
    z = Fraction(0)
    o = Fraction(1)

    def vec(i1=z, ii=z, jj=z, kk=z):
        return [i1, ii, jj, kk]

    table = [
        [vec(i1=o), vec(ii=o), vec(jj=o), vec(kk=o)],            # 1 * x
        [vec(ii=o), vec(i1=a), vec(kk=o), vec(jj=a)],            # i * x
        [vec(jj=o), vec(kk=-o), vec(i1=b), vec(ii=-b)],          # j * x
        [vec(kk=o), vec(jj=-a), vec(ii=b), vec(i1=-a * b)],      # k * x
    ]
    alg = StructAlgebra(table, basis_names=("1", "i", "j", "k"))
    spec = SubfieldSpec.make(
        alg,
        basis=(alg.one, alg.basis_element(1)),
        generator_images=((alg.one, -alg.basis_element(1)),),
    )
    return alg, spec


def tensor(a1: StructAlgebra, a2: StructAlgebra) -> StructAlgebra:
    """Tensor product with Kronecker structure constants."""
    dim1, dim2 = a1.dim, a2.dim
    dim = dim1 * dim2
    names = tuple(f"{n1}⊗{n2}" for n1 in a1.basis_names for n2 in a2.basis_names)
    table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i1 in range(dim1):
        for j1 in range(dim1):
            prod1 = a1._basis_mul(i1, j1).coeffs
            for i2 in range(dim2):
                for j2 in range(dim2):
                    prod2 = a2._basis_mul(i2, j2).coeffs
                    cell = table[i1 * dim2 + i2][j1 * dim2 + j2]
                    for k1, c1 in enumerate(prod1):
                        if not c1:
                            continue
                        for k2, c2 in enumerate(prod2):
                            if c2:
                                cell[k1 * dim2 + k2] = c1 * c2
    return StructAlgebra(table, basis_names=names)


def embed_left(t: StructAlgebra, a1: StructAlgebra, x: AlgElement, dim2: int) -> AlgElement:
    """x ⊗ 1 inside the tensor algebra t = a1 ⊗ a2."""
    coeffs = [Fraction(0)] * t.dim
    for i, c in enumerate(x.coeffs):
        coeffs[i * dim2] = c
    return t.element(coeffs)


def embed_right(t: StructAlgebra, a2: StructAlgebra, y: AlgElement) -> AlgElement:
    """1 ⊗ y inside the tensor algebra t = a1 ⊗ a2."""
    coeffs = [Fraction(0)] * t.dim
    for j, c in enumerate(y.coeffs):
        coeffs[j] = c
    return t.element(coeffs)


# ---------------------------------------------------------------------------
# subfields, centralizers, conjugating units


@dataclass(frozen=True)
class SubfieldSpec:
    """A commutative subalgebra K with its Galois generators.

    basis spans K; generator_images[g][i] is the image of basis[i] under the
    g-th generator.  Construction verifies commutativity, closure of the
    span under multiplication, and that each generator is a ring
    automorphism of the span fixing the unit.
    """

    alg: StructAlgebra
    basis: tuple[AlgElement, ...]
    generator_images: tuple[tuple[AlgElement, ...], ...]
    orders: tuple[int, ...]

    @classmethod
    def make(cls, alg: StructAlgebra, basis, generator_images) -> "SubfieldSpec":
        basis = tuple(basis)
        generator_images = tuple(tuple(images) for images in generator_images)
        for x in basis:
            alg._check(x)
        for x in basis:
            for y in basis:
                if alg.mul(x, y) != alg.mul(y, x):
                    raise AlgebraError("subfield basis elements must commute")
        spec = cls(alg, basis, generator_images, ())
        if spec.coords(alg.one) is None:
            raise AlgebraError("the unit must lie in the subfield span")
        for x in basis:
            for y in basis:
                if spec.coords(alg.mul(x, y)) is None:
                    raise AlgebraError("subfield span is not closed under products")
        orders = []
        for images in generator_images:
            mat = spec._images_matrix(images)
            spec._verify_automorphism(images)
            orders.append(spec._matrix_order(mat))
        return cls(alg, basis, generator_images, tuple(orders))

    @property
    def degree(self) -> int:
        return len(self.basis)

    def coords(self, x: AlgElement):
        """Coordinates of x in the subfield basis, or None if outside."""
        rows = [[b.coeffs[k] for b in self.basis] for k in range(self.alg.dim)]
        return linalg.solve(rows, x.coeffs)

    def _images_matrix(self, images):
        """Matrix (columns = images) of a generator in the subfield basis."""
        cols = []
        for img in images:
            c = self.coords(img)
            if c is None:
                raise AlgebraError("generator image leaves the subfield span")
            cols.append(c)
        return cols

    def _apply_matrix(self, mat, exps_vec):
        return [sum((mat[j][i] * exps_vec[j] for j in range(len(mat))), Fraction(0))
                for i in range(len(mat))]

    def _matrix_order(self, mat) -> int:
        n = len(mat)
        ident = [[Fraction(i == j) for j in range(n)] for i in range(n)]
        cur = mat
        for order in range(1, 65):
            as_rows = [[cur[j][i] for j in range(n)] for i in range(n)]
            if as_rows == ident:
                return order
            cur = [self._apply_matrix(mat, col) for col in cur]
        raise AlgebraError("generator order exceeds supported bound")

    def _verify_automorphism(self, images):
        alg = self.alg
        if self.apply(images, alg.one) != alg.one:
            raise AlgebraError("generator does not fix the unit")
        for x, gx in zip(self.basis, images):
            for y, gy in zip(self.basis, images):
                if self.apply(images, alg.mul(x, y)) != alg.mul(gx, gy):
                    raise AlgebraError("generator is not multiplicative")

    def combine(self, coords) -> AlgElement:
        out = self.alg.zero
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b.scaled(c)
        return out

    def apply(self, images, x: AlgElement) -> AlgElement:
        """Image of a span element under the map sending basis -> images."""
        coords = self.coords(x)
        if coords is None:
            raise AlgebraError(f"{x} is not in the subfield span")
        out = self.alg.zero
        for c, img in zip(coords, images):
            if c:
                out = out + img.scaled(c)
        return out

    def automorphism_images(self, exponents) -> tuple[AlgElement, ...]:
        """Images of the basis under the product of generator powers."""
        if len(exponents) != len(self.generator_images):
            raise AlgebraError("one exponent per generator required")
        current = tuple(self.basis)
        for images, power, order in zip(self.generator_images, exponents, self.orders):
            for _ in range(power % order):
                current = tuple(self.apply(images, x) for x in current)
        return current


def tensor_subfield(t: StructAlgebra, a1: StructAlgebra, s1: SubfieldSpec,
                    a2: StructAlgebra, s2: SubfieldSpec) -> SubfieldSpec:
    """Componentwise combination of subfield specs on a tensor algebra."""
    basis = tuple(t.mul(embed_left(t, a1, x, a2.dim), embed_right(t, a2, y))
                  for x in s1.basis for y in s2.basis)
    gens = []
    for images in s1.generator_images:
        gens.append(tuple(
            t.mul(embed_left(t, a1, gx, a2.dim), embed_right(t, a2, y))
            for gx in images for y in s2.basis))
    for images in s2.generator_images:
        gens.append(tuple(
            t.mul(embed_left(t, a1, x, a2.dim), embed_right(t, a2, gy))
            for x in s1.basis for gy in images))
    return SubfieldSpec.make(t, basis, gens)


def centralizer(alg: StructAlgebra, spec: SubfieldSpec) -> list[AlgElement]:
    """Canonical basis of C_A(K) = {u : uk = ku for all k in K}.

    For A central simple and K a subfield, dim C * dim K = dim A; a
    violation is reported as a warning, not an error.
    """
    rows = []
    for k in spec.basis:
        left = alg.left_mult_rows(k)
        right = alg.right_mult_rows(k)
        for r in range(alg.dim):
            rows.append([left[r][c] - right[r][c] for c in range(alg.dim)])
    basis = [alg.element(vec) for vec in linalg.nullspace(rows)]
    if len(basis) * spec.degree != alg.dim:
        warnings.warn(
            f"centralizer dimension {len(basis)} * subfield degree {spec.degree}"
            f" != algebra dimension {alg.dim}; the subfield data is suspect",
            stacklevel=2)
    return basis


def conjugating_unit(alg: StructAlgebra, spec: SubfieldSpec, images) -> AlgElement:
    """An invertible u with u^-1 k u = image(k) for all k in the subfield.

    Solves k u = u k^g as a linear system and picks the first invertible
    vector of the canonical nullspace basis (then small combinations).
    Existence is the Skolem-Noether theorem; failure means the data does
    not describe a subfield automorphism induced by conjugation.
    """
    rows = []
    for k, image in zip(spec.basis, images):
        left = alg.left_mult_rows(k)
        right = alg.right_mult_rows(image)
        for r in range(alg.dim):
            rows.append([left[r][c] - right[r][c] for c in range(alg.dim)])
    basis = [alg.element(vec) for vec in linalg.nullspace(rows)]
    candidates = list(basis)
    for i in range(1, len(basis)):
        candidates.append(basis[0] + basis[i])
    for u in candidates:
        if u.is_zero:
            continue
        u_inv = alg.inverse(u)
        if u_inv is None:
            continue
        if all(alg.mul(alg.mul(u_inv, k), u) == image
               for k, image in zip(spec.basis, images)):
            return u
    raise AlgebraError("no invertible conjugating unit found: the map is not "
                       "induced by an inner automorphism")
