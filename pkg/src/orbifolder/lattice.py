"""Even positive-definite lattices given by Gram matrices, and their sublattices.

Vectors are coordinate tuples with respect to the lattice basis. An isometry
is an integer matrix M acting on coordinate columns, v ↦ M·v, with
Mᵀ·G·M = G.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Optional, Sequence

from . import exact
from .exact import IntMatrix, RatMatrix

Vector = tuple  # tuple of int or Fraction


@dataclass(frozen=True, eq=False)
class Lattice:
    gram: IntMatrix
    label: Optional[str] = None
    # rational covector used to pick a positive system of roots
    positivity: Optional[tuple[Fraction, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        g = exact.as_matrix(self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(r) != n for r in g):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            if g[i][i] % 2:
                raise ValueError(f"lattice is not even: diagonal entry {i} is {g[i][i]}")
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix is not symmetric")
        for k in range(1, n + 1):
            if exact.det([r[:k] for r in g[:k]]) <= 0:
                raise ValueError("Gram matrix is not positive definite")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def det(self) -> int:
        return exact.det(self.gram)

    @cached_property
    def gram_inverse(self) -> RatMatrix:
        return exact.inverse(self.gram)

    @property
    def is_unimodular(self) -> bool:
        return self.det == 1

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"Lattice(label={self.label!r}, rank={self.rank}, det={self.det})"


def inner_product(L: Lattice, u: Sequence, v: Sequence) -> Fraction:
    if len(u) != L.rank or len(v) != L.rank:
        raise ValueError("dimension mismatch")
    return Fraction(exact.quadratic_form(L.gram, u, v))


def norm(L: Lattice, v: Sequence) -> Fraction:
    return inner_product(L, v, v)


def dual_basis(L: Lattice) -> RatMatrix:
    """Rows are the dual basis vectors in lattice coordinates (columns of G⁻¹)."""
    return L.gram_inverse


@dataclass(frozen=True)
class DiscriminantGroup:
    elementary_divisors: tuple[int, ...]
    generators: tuple[Vector, ...]
    order: int


def discriminant_group(L: Lattice) -> DiscriminantGroup:
    snf = exact.smith_normal_form(L.gram)
    uinv = exact.inverse(snf.U)
    ginv = L.gram_inverse
    divs, gens = [], []
    for i, d in enumerate(snf.diagonal):
        if d > 1:
            e = tuple(uinv[j][i] for j in range(L.rank))
            divs.append(d)
            gens.append(exact.mat_vec(ginv, e))
    order = 1
    for d in divs:
        order *= d
    return DiscriminantGroup(tuple(divs), tuple(gens), order)


@dataclass(frozen=True, eq=False)
class Sublattice:
    """A sublattice spanned by rational rows ``basis`` in ambient coordinates."""

    ambient: Lattice
    basis: RatMatrix

    def __post_init__(self):
        b = tuple(tuple(Fraction(x) for x in r) for r in self.basis)
        object.__setattr__(self, "basis", b)
        if b and exact.rank(b) != len(b):
            raise ValueError("sublattice basis is linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def gram(self) -> RatMatrix:
        gb = exact.mat_mul(self.basis, self.ambient.gram) if self.basis else ()
        return exact.mat_mul(gb, exact.transpose(self.basis)) if self.basis else ()

    @cached_property
    def det(self) -> Fraction:
        return exact.rational_det(self.gram) if self.basis else Fraction(1)

    def coordinates(self, v: Sequence) -> Optional[tuple[Fraction, ...]]:
        """Coordinates of v in this basis, or None if v is outside the span."""
        return exact.rational_solve_in_span(self.basis, [Fraction(x) for x in v])

    def vector(self, coords: Sequence) -> Vector:
        out = [Fraction(0)] * self.ambient.rank
        for c, b in zip(coords, self.basis):
            if c:
                for k, x in enumerate(b):
                    out[k] += c * x
        return tuple(out)

    @cached_property
    def dual(self) -> "Sublattice":
        """Dual lattice inside the rational span of this sublattice."""
        if not self.basis:
            return self
        ginv = exact.inverse(self.gram)
        return Sublattice(self.ambient, exact.mat_mul(ginv, self.basis))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self.gram for x in r)

    def __repr__(self):
        return f"Sublattice(rank={self.rank}, det={self.det})"


def whole(L: Lattice) -> Sublattice:
    return Sublattice(L, exact.identity(L.rank))


def sublattice_from_generators(L: Lattice, gens: Sequence[Sequence]) -> Sublattice:
    return Sublattice(L, exact.lattice_basis(gens))


def fixed_sublattice(L: Lattice, nu: Sequence[Sequence[int]]) -> Sublattice:
    """L^ν = ker(ν − 1) ∩ L, returned with a saturated integral basis."""
    a = exact.mat_sub(nu, exact.identity(L.rank))
    return Sublattice(L, exact.integer_kernel(a, L.rank))


def orthogonal_complement(L: Lattice, sub: Sublattice) -> Sublattice:
    """Vectors of L orthogonal to ``sub``."""
    if not sub.basis:
        return whole(L)
    rows = exact.mat_mul(sub.basis, L.gram)
    d = exact.common_denominator(x for r in rows for x in r)
    rows = [[int(x * d) for x in r] for r in rows]
    return Sublattice(L, exact.integer_kernel(rows, L.rank))


def coinvariant_sublattice(L: Lattice, nu: Sequence[Sequence[int]]) -> Sublattice:
    return orthogonal_complement(L, fixed_sublattice(L, nu))


def matrix_order(m: Sequence[Sequence[int]], limit: int = 10_000) -> int:
    n = len(m)
    one = exact.identity(n)
    cur = exact.as_matrix(m)
    k = 1
    while cur != one:
        cur = exact.mat_mul(cur, m)
        k += 1
        if k > limit:
            raise ValueError("matrix does not have finite order")
    return k


def project_fixed(nu: Sequence[Sequence[int]], v: Sequence, order: Optional[int] = None) -> Vector:
    """π_ν(v) = (1/m)·Σ ν^i v."""
    m = order or matrix_order(nu)
    acc = [Fraction(0)] * len(v)
    cur = tuple(Fraction(x) for x in v)
    for _ in range(m):
        acc = [a + c for a, c in zip(acc, cur)]
        cur = exact.mat_vec(nu, cur)
    return tuple(a / m for a in acc)


def projected_lattice(L: Lattice, nu: Sequence[Sequence[int]], order: Optional[int] = None) -> Sublattice:
    """π_ν(L), generated by the projections of the basis vectors."""
    m = order or matrix_order(nu)
    gens = [project_fixed(nu, e, m) for e in exact.identity(L.rank)]
    return Sublattice(L, exact.lattice_basis(gens))


def contains(M: Sublattice | Lattice, v: Sequence) -> bool:
    if isinstance(M, Lattice):
        return all(Fraction(x).denominator == 1 for x in v)
    c = M.coordinates(v)
    return c is not None and all(x.denominator == 1 for x in c)


def coset_order(h: Sequence, M: Sublattice | Lattice) -> int:
    """Smallest k ≥ 1 with k·h ∈ M."""
    if isinstance(M, Lattice):
        return lcm(1, *(Fraction(x).denominator for x in h))
    c = M.coordinates(h)
    if c is None:
        raise ValueError("no multiple of h lies in the sublattice")
    return lcm(1, *(x.denominator for x in c))


def sublattice_index(A: Sublattice, B: Sublattice) -> int:
    """|A/B| for B ⊆ A of equal rank."""
    if A.rank != B.rank:
        raise ValueError("rank mismatch")
    if A.rank == 0:
        return 1
    coords = []
    for b in B.basis:
        c = A.coordinates(b)
        if c is None or any(x.denominator != 1 for x in c):
            raise ValueError("B is not contained in A")
        coords.append([int(x) for x in c])
    return abs(exact.det(coords))


def subset_with_integral_pairing(M: Sublattice, h: Sequence) -> Sublattice:
    """{α ∈ M : ⟨α, h⟩ ∈ Z}."""
    pair = [Fraction(exact.quadratic_form(M.ambient.gram, b, h)) for b in M.basis]
    d = lcm(1, *(p.denominator for p in pair))
    if d == 1:
        return M
    # kernel of x ↦ Σ x_i·(d·p_i) mod d, as a sublattice of Z^rank
    row = [int(p * d) % d for p in pair]
    gens = [tuple(int(i == j) * d for j in range(M.rank)) for i in range(M.rank)]
    # solutions: x with Σ row_i x_i ≡ 0 (mod d); use the kernel of [row | d]
    ker = exact.integer_kernel([row + [d]], M.rank + 1)
    gens += [k[:-1] for k in ker]
    coord_basis = exact.lattice_basis(gens)
    return Sublattice(M.ambient, [M.vector(c) for c in coord_basis])
