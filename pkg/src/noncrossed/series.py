"""Twisted series over the centralizer of a subfield, indexed by a totally
ordered abelian group.

Elements are finitely supported, so every asserted identity is exact;
cutoff-bounded inversion recovers the series phenomena.  The coefficient
twist is the general cocycle rule

    (a_g r)(a_h s) = a_{g+h} (u_{gh}^-1 u_g r u_h s)

with one conjugating unit per Galois group element and u_Id = 1; no
finite-order assumption on the units is needed for associativity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebras import AlgElement, AlgebraError, StructAlgebra, SubfieldSpec, centralizer, conjugating_unit
from . import linalg


class _Infinity:
    """Valuation of the zero series; larger than every group element."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __gt__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __ge__(self, other):
        return True

    def __le__(self, other):
        return self is other

    def __repr__(self):
        return "inf"


INFINITY = _Infinity()


@dataclass(frozen=True)
class OrderedGroup:
    """Z, or Z x Z with the lexicographic order.

    Elements are ints (Z) or int pairs (Z x Z); the native comparison of
    ints and tuples is the required total order in both cases.
    """

    kind: str

    @classmethod
    def integers(cls) -> "OrderedGroup":
        return cls("Z")

    @classmethod
    def lex_plane(cls) -> "OrderedGroup":
        return cls("ZxZ")

    @property
    def rank(self) -> int:
        return 1 if self.kind == "Z" else 2

    def zero(self):
        return 0 if self.kind == "Z" else (0, 0)

    def generators(self):
        if self.kind == "Z":
            return (1,)
        return ((1, 0), (0, 1))

    def check(self, g):
        if self.kind == "Z":
            if not isinstance(g, int):
                raise ValueError(f"{g!r} is not an element of Z")
            return g
        if (not isinstance(g, tuple) or len(g) != 2
                or not all(isinstance(c, int) for c in g)):
            raise ValueError(f"{g!r} is not an element of Z x Z")
        return g

    def add(self, a, b):
        if self.kind == "Z":
            return a + b
        return (a[0] + b[0], a[1] + b[1])

    def neg(self, a):
        if self.kind == "Z":
            return -a
        return (-a[0], -a[1])

    def scale(self, n: int, a):
        if self.kind == "Z":
            return n * a
        return (n * a[0], n * a[1])

    def __str__(self):
        return "Z" if self.kind == "Z" else "ZxZ(lex)"


@dataclass(frozen=True)
class EpsilonMap:
    """Surjective homomorphism from the index group onto the Galois group.

    The target is a product of cyclic groups (one per Galois generator);
    elements are exponent tuples.  Each index-group generator maps to a
    fixed target element, so images and the kernel are computable.
    """

    group: OrderedGroup
    orders: tuple[int, ...]
    images: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, group: OrderedGroup, orders, images) -> "EpsilonMap":
        orders = tuple(int(n) for n in orders)
        images = tuple(tuple(v % n for v, n in zip(img, orders)) for img in images)
        if len(images) != group.rank:
            raise ValueError("one image per index-group generator required")
        if any(len(img) != len(orders) for img in images):
            raise ValueError("images must have one exponent per cyclic factor")
        e = cls(group, orders, images)
        if len(e._generated()) != e.target_size:
            raise ValueError("the map is not surjective onto the Galois group")
        return e

    @property
    def target_size(self) -> int:
        size = 1
        for n in self.orders:
            size *= n
        return size

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    def target_elements(self):
        return list(itertools.product(*(range(n) for n in self.orders)))

    def compose(self, g, h):
        return tuple((x + y) % n for x, y, n in zip(g, h, self.orders))

    def _generated(self):
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            g = frontier.pop()
            for img in self.images:
                nxt = self.compose(g, img)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return seen

    def apply(self, gamma) -> tuple[int, ...]:
        gamma = self.group.check(gamma)
        exps = (gamma,) if self.group.kind == "Z" else gamma
        out = self.identity
        for z, img in zip(exps, self.images):
            out = tuple((o + z * v) % n for o, v, n in zip(out, img, self.orders))
        return out

    def in_kernel(self, gamma) -> bool:
        return self.apply(gamma) == self.identity

    def kernel_label(self) -> str:
        if self.group.kind == "Z":
            n = self.target_size
            return f"{n}Z"
        return "ker ε lattice in ZxZ"


class MNContext:
    """Everything needed to multiply twisted series.

    Carries the ambient algebra, the subfield with its Galois generators,
    the epsilon map, one verified conjugating unit per Galois group element
    (the identity unit pinned to 1), and the centralizer basis coefficients
    must lie in.
    """

    def __init__(self, alg: StructAlgebra, subfield: SubfieldSpec,
                 eps: EpsilonMap, units: dict | None = None, name: str = ""):
        if eps.orders != subfield.orders:
            raise ValueError(
                f"epsilon target {eps.orders} does not match Galois generator "
                f"orders {subfield.orders}")
        self.alg = alg
        self.subfield = subfield
        self.eps = eps
        self.name = name or f"MN({alg.dim}-dim, {eps.group})"
        self.cent_basis = centralizer(alg, subfield)
        self._cent_rows = [[b.coeffs[k] for b in self.cent_basis]
                           for k in range(alg.dim)]
        self.units: dict[tuple[int, ...], AlgElement] = {}
        self.unit_invs: dict[tuple[int, ...], AlgElement] = {}
        for g in eps.target_elements():
            if g == eps.identity:
                u = alg.one
            elif units is not None and g in units:
                u = units[g]
            else:
                u = conjugating_unit(alg, subfield, subfield.automorphism_images(g))
            self._install_unit(g, u)

    def _install_unit(self, g, u: AlgElement):
        u_inv = self.alg.inverse(u)
        if u_inv is None:
            raise AlgebraError(f"unit for {g} is not invertible")
        images = self.subfield.automorphism_images(g)
        for k, image in zip(self.subfield.basis, images):
            if self.alg.mul(self.alg.mul(u_inv, k), u) != image:
                raise AlgebraError(f"unit for {g} does not realize the automorphism")
        self.units[g] = u
        self.unit_invs[g] = u_inv

    @classmethod
    def with_power_units(cls, alg: StructAlgebra, subfield: SubfieldSpec,
                         eps: EpsilonMap, name: str = "") -> "MNContext":
        """Units u_{sigma^z} = u_sigma^z for a cyclic Galois group.

        Well-defined as a function of the group element only when
        u_sigma^n = 1; then the cocycle is trivial and a_g a_h = a_{g+h}.
        """
        if len(eps.orders) != 1:
            raise ValueError("power units need a cyclic Galois group")
        n = eps.orders[0]
        u = conjugating_unit(alg, subfield, subfield.automorphism_images((1,)))
        power = alg.one
        for _ in range(n):
            power = alg.mul(power, u)
        if power != alg.one:
            raise AlgebraError(
                f"u^{n} != 1, so powers of u are not well-defined per group element")
        units = {}
        power = alg.one
        for z in range(n):
            units[(z,)] = power
            power = alg.mul(power, u)
        return cls(alg, subfield, eps, units=units, name=name)

    def cocycle(self, g, h) -> AlgElement:
        """u_{gh}^-1 u_g u_h, the coefficient of a_{g+h} in a_g a_h."""
        gh = self.eps.compose(g, h)
        return self.alg.mul(self.unit_invs[gh],
                            self.alg.mul(self.units[g], self.units[h]))

    def has_trivial_cocycle(self) -> bool:
        one = self.alg.one
        elems = self.eps.target_elements()
        return all(self.cocycle(g, h) == one for g in elems for h in elems)

    def cent_coords(self, x: AlgElement):
        return linalg.solve(self._cent_rows, x.coeffs)

    def in_centralizer(self, x: AlgElement) -> bool:
        return self.cent_coords(x) is not None

    def series(self, terms) -> "TwistedSeries":
        return TwistedSeries.make(self, terms)

    def monomial(self, gamma, coeff) -> "TwistedSeries":
        return TwistedSeries.make(self, {gamma: coeff})

    def __repr__(self):
        return f"MNContext({self.name})"


def degree_identity(ctx: MNContext) -> tuple[int, int, bool]:
    """([D : Z(D)], [A : F], equal): the structural degree comparison.

    [D : Z(D)] = (index of ker epsilon) * dim C_A(K) = |G| * dim C_A(K).
    """
    dim_d = ctx.eps.target_size * len(ctx.cent_basis)
    dim_a = ctx.alg.dim
    return dim_d, dim_a, dim_d == dim_a


class TwistedSeries:
    """Finitely supported element sum a_gamma r_gamma of the twisted ring."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: MNContext, terms: dict):
        self.ctx = ctx
        self.terms = terms

    @classmethod
    def make(cls, ctx: MNContext, terms) -> "TwistedSeries":
        clean = {}
        for gamma, coeff in dict(terms).items():
            gamma = ctx.eps.group.check(gamma)
            if isinstance(coeff, (int, Fraction)):
                coeff = ctx.alg.scalar(coeff)
            if coeff.is_zero:
                continue
            if not ctx.in_centralizer(coeff):
                raise ValueError(
                    f"coefficient {coeff} at {gamma} is not in the centralizer")
            clean[gamma] = coeff
        return cls(ctx, clean)

    @classmethod
    def zero(cls, ctx: MNContext) -> "TwistedSeries":
        return cls(ctx, {})

    @classmethod
    def one(cls, ctx: MNContext) -> "TwistedSeries":
        return cls(ctx, {ctx.eps.group.zero(): ctx.alg.one})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return tuple(sorted(self.terms))

    def _check(self, other: "TwistedSeries"):
        if self.ctx is not other.ctx:
            raise ValueError("series from different contexts")

    def __add__(self, other: "TwistedSeries") -> "TwistedSeries":
        self._check(other)
        terms = dict(self.terms)
        for gamma, coeff in other.terms.items():
            acc = terms.get(gamma)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero:
                terms.pop(gamma, None)
            else:
                terms[gamma] = acc
        return TwistedSeries(self.ctx, terms)

    def __neg__(self) -> "TwistedSeries":
        return TwistedSeries(self.ctx, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other: "TwistedSeries") -> "TwistedSeries":
        return self + (-other)

    def __mul__(self, other: "TwistedSeries") -> "TwistedSeries":
        self._check(other)
        ctx = self.ctx
        alg = ctx.alg
        eps = ctx.eps
        group = eps.group
        mul = alg.mul
        right = [(delta, eps.apply(delta), mul(ctx.units[eps.apply(delta)], s))
                 for delta, s in other.terms.items()]
        out: dict = {}
        for gamma, r in self.terms.items():
            g = eps.apply(gamma)
            ug_r = mul(ctx.units[g], r)
            for delta, h, uh_s in right:
                alpha = mul(ctx.unit_invs[eps.compose(g, h)], mul(ug_r, uh_s))
                if alpha.is_zero:
                    continue
                key = group.add(gamma, delta)
                acc = out.get(key)
                acc = alpha if acc is None else acc + alpha
                if acc.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = acc
        return TwistedSeries(ctx, out)

    def __eq__(self, other):
        return (isinstance(other, TwistedSeries) and self.ctx is other.ctx
                and self.terms == other.terms)

    def valuation(self):
        """Min of the support; INFINITY for the zero series."""
        if not self.terms:
            return INFINITY
        return min(self.terms)

    def leading(self) -> AlgElement:
        if not self.terms:
            raise ValueError("the zero series has no leading coefficient")
        return self.terms[self.valuation()]

    def invert_up_to(self, cutoff, max_iterations: int = 256) -> "TwistedSeries":
        """A series t with supp(self * t - 1) entirely above the cutoff.

        Writes self = h(1 + w) for the leading monomial h and iterates the
        geometric series; needs an invertible leading coefficient.  Raises
        if the cutoff is unreachable within the iteration bound (for the
        lexicographic plane that happens when the tail advances only the
        second coordinate while the cutoff requires passing a first-
        coordinate step).
        """
        ctx = self.ctx
        group = ctx.eps.group
        if self.is_zero:
            raise AlgebraError("the zero series has no inverse")
        gamma0 = self.valuation()
        r0 = self.terms[gamma0]
        r0_inv = ctx.alg.inverse(r0)
        if r0_inv is None:
            raise AlgebraError(f"leading coefficient {r0} is not invertible")
        # monomial inverse of h = a_{gamma0} r0: exact two-sided inverse
        delta0 = group.neg(gamma0)
        g = ctx.eps.apply(gamma0)
        gi = ctx.eps.apply(delta0)
        c = ctx.alg.mul(ctx.unit_invs[gi],
                        ctx.alg.mul(r0_inv, ctx.unit_invs[g]))
        h_inv = TwistedSeries(ctx, {delta0: c})
        one = TwistedSeries.one(ctx)
        h = TwistedSeries(ctx, {gamma0: r0})
        neg_w = h_inv * (h - self)  # -w, with v(w) > 0
        acc = h_inv
        term = h_inv
        for _ in range(max_iterations):
            residual = self * acc - one
            if residual.is_zero or residual.valuation() > cutoff:
                return acc
            term = neg_w * term
            acc = acc + term
        raise AlgebraError(
            f"cutoff {cutoff} not reached after {max_iterations} iterations; "
            "it is not reachable by finitely supported partial inverses")

    def is_central(self) -> bool:
        """Exact commutation test against generators of the whole ring.

        Commuting with the centralizer basis at a_0, with a_gamma for each
        index-group generator, and with the subfield basis at a_0 generates
        commutation with everything.
        """
        ctx = self.ctx
        zero = ctx.eps.group.zero()
        probes = [TwistedSeries(ctx, {zero: c}) for c in ctx.cent_basis]
        probes += [TwistedSeries(ctx, {gen: ctx.alg.one})
                   for gen in ctx.eps.group.generators()]
        probes += [TwistedSeries(ctx, {zero: k}) for k in ctx.subfield.basis]
        return all(self * probe == probe * self for probe in probes)

    def is_central_structural(self) -> bool:
        """Support in ker epsilon and every coefficient a rational multiple of 1."""
        ctx = self.ctx
        for gamma, coeff in self.terms.items():
            if not ctx.eps.in_kernel(gamma):
                return False
            scaled = coeff.coeffs
            unit = ctx.alg.one.coeffs
            ratio = None
            for c, u in zip(scaled, unit):
                if u == 0:
                    if c != 0:
                        return False
                elif ratio is None:
                    ratio = c / u
                elif c != ratio * u:
                    return False
        return True

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"a_({g})·[{self.terms[g]}]" for g in sorted(self.terms))

    __repr__ = __str__
