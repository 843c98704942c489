"""Lifts of lattice isometries to the lattice vertex algebra.

The twisted group algebra uses the bimultiplicative cocycle
ε(α,β) = (−1)^{αᵀEβ} with E the strictly lower triangle of the Gram matrix,
so ε(b_i,b_j) = (−1)^{⟨b_i,b_j⟩} for i > j and 1 otherwise. A lift ν̂ acts by
ν̂·e_α = η(α)·e_{να}, and η(α) = (−1)^{q(α)} for a quadratic function q with
q(α+β) = q(α) + q(β) + αᵀFβ (mod 2), F = E − νᵀEν.

Phases are elements of Q/Z stored as Fractions in [0, 1); the scalar they
stand for is e^{2πi·phase}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Optional, Sequence

from . import exact
from .isometry import Isometry, frame_shape, order_doubling
from .lattice import Lattice, Sublattice, fixed_sublattice

Phase = Fraction


def _strict_lower(g: exact.IntMatrix) -> exact.IntMatrix:
    n = len(g)
    return tuple(tuple(g[i][j] % 2 if i > j else 0 for j in range(n)) for i in range(n))


@dataclass(frozen=True, eq=False)
class Cocycle:
    lattice: Lattice

    @cached_property
    def matrix(self) -> exact.IntMatrix:
        return _strict_lower(self.lattice.gram)

    def bit(self, a: Sequence[int], b: Sequence[int]) -> int:
        return exact.quadratic_form(self.matrix, a, b) % 2

    def value(self, a: Sequence[int], b: Sequence[int]) -> int:
        return -1 if self.bit(a, b) else 1


def cocycle(L: Lattice) -> Cocycle:
    return Cocycle(L)


def _f_matrix(nu: Isometry) -> exact.IntMatrix:
    e = cocycle(nu.lattice).matrix
    m = nu.matrix
    ene = exact.mat_mul(exact.mat_mul(exact.transpose(m), e), m)
    return tuple(tuple((x - y) % 2 for x, y in zip(r, s)) for r, s in zip(e, ene))


@dataclass(frozen=True, eq=False)
class EtaFunction:
    """η for the isometry ``nu``, fixed by its values on the basis."""

    nu: Isometry
    basis_bits: tuple[int, ...]

    @cached_property
    def f(self) -> exact.IntMatrix:
        return _f_matrix(self.nu)

    def bit(self, a: Sequence[int]) -> int:
        f = self.f
        n = len(a)
        s = 0
        for i in range(n):
            ai = a[i]
            if not ai:
                continue
            s += ai * self.basis_bits[i] + (ai * (ai - 1) // 2) * f[i][i]
            row = f[i]
            for j in range(i + 1, n):
                if a[j] and row[j]:
                    s += ai * a[j]
        return s % 2

    def value(self, a: Sequence[int]) -> int:
        return -1 if self.bit(a) else 1


def eta_from_basis(nu: Isometry, bits: Sequence[int]) -> EtaFunction:
    return EtaFunction(nu, tuple(int(b) % 2 for b in bits))


def standard_eta(nu: Isometry) -> EtaFunction:
    """An η that is trivial on L^ν."""
    n = nu.lattice.rank
    base = eta_from_basis(nu, [0] * n)
    fixed = [[int(x) for x in b] for b in nu.fixed.basis]
    if not fixed:
        return base
    target = [base.bit(b) for b in fixed]
    lam = exact.solve_mod2(fixed, target, n)
    if lam is None:
        raise ArithmeticError("no character cancels η on the fixed sublattice")
    eta = eta_from_basis(nu, lam)
    if any(eta.bit(b) for b in fixed):
        raise ArithmeticError("standard lift check failed")
    return eta


def eta_power_bit(eta: EtaFunction, i: int, a: Sequence[int]) -> int:
    """Sign bit of ν̂^i on e_α: Σ_{j<i} q(ν^j α) mod 2."""
    s = 0
    cur = tuple(a)
    for _ in range(i):
        s += eta.bit(cur)
        cur = eta.nu.apply(cur)
    return s % 2


@dataclass(frozen=True, eq=False)
class LiftedAutomorphism:
    """g = ν̂·e^{−2πi·h(0)} with ν̂ given by η."""

    eta: EtaFunction
    h: tuple[Fraction, ...]

    def __post_init__(self):
        h = tuple(Fraction(x) for x in self.h)
        object.__setattr__(self, "h", h)
        if len(h) != self.lattice.rank:
            raise ValueError("h has the wrong dimension")
        if self.nu.apply(h) != h:
            raise ValueError("h not fixed by ν")

    @property
    def nu(self) -> Isometry:
        return self.eta.nu

    @property
    def lattice(self) -> Lattice:
        return self.eta.nu.lattice

    @cached_property
    def gh(self) -> tuple[Fraction, ...]:
        """G·h, so that ⟨h, α⟩ = gh·α."""
        return exact.mat_vec(self.lattice.gram, self.h)

    def pairing(self, a: Sequence) -> Fraction:
        return exact.dot(self.gh, a)

    @cached_property
    def order(self) -> int:
        return order_of(self)


def lift(nu: Isometry, h: Optional[Sequence] = None, eta: Optional[EtaFunction] = None) -> LiftedAutomorphism:
    if eta is None:
        eta = standard_eta(nu)
    if h is None:
        h = (0,) * nu.lattice.rank
    return LiftedAutomorphism(eta, tuple(h))


def lift_power_sign(g: LiftedAutomorphism | EtaFunction, i: int, a: Sequence[int]) -> int:
    eta = g.eta if isinstance(g, LiftedAutomorphism) else g
    return -1 if eta_power_bit(eta, i, a) else 1


def s_vector(g: LiftedAutomorphism | EtaFunction, i: int) -> tuple[Fraction, ...]:
    """s_i ∈ (1/2)(L^{ν^i})' with e^{−2πi⟨s_i,α⟩} the sign of ν̂^i on L^{ν^i}."""
    eta = g.eta if isinstance(g, LiftedAutomorphism) else g
    cache = eta.__dict__.setdefault("_s", {})
    if i not in cache:
        cache[i] = _s_vector(eta, i)
    return cache[i]


def _s_vector(eta: EtaFunction, i: int) -> tuple[Fraction, ...]:
    nu = eta.nu
    L = nu.lattice
    fixed = nu.power(i).fixed
    if fixed.rank == 0:
        return (Fraction(0),) * L.rank
    bits = [eta_power_bit(eta, i, [int(x) for x in b]) for b in fixed.basis]
    dual = fixed.dual.basis
    out = [Fraction(0)] * L.rank
    for e, d in zip(bits, dual):
        if e:
            out = [x + y / 2 for x, y in zip(out, d)]
    return tuple(out)


def order_of(g: LiftedAutomorphism) -> int:
    """Order of g: m times the order of the phase of g^m on L."""
    m = g.nu.order
    L = g.lattice
    t = 1
    for k in range(L.rank):
        e = tuple(int(i == k) for i in range(L.rank))
        x = Fraction(eta_power_bit(g.eta, m, e), 2) - m * g.pairing(e)
        t = lcm(t, exact.frac_mod1(x).denominator)
    return m * t


def doubling_vector(eta: EtaFunction) -> tuple[Fraction, ...]:
    """A ν-fixed s with m·s ≡ s_m (mod L'), so that h ∈ s + (1/m)(L')^ν gives order m."""
    nu = eta.nu
    L = nu.lattice
    m = nu.order
    n = L.rank
    sigma = [eta_power_bit(eta, m, tuple(int(i == k) for i in range(n))) for k in range(n)]
    if not any(sigma):
        return (Fraction(0),) * n
    z = dual_fixed_coordinates(nu)
    # x = ½ Σ c_k G⁻¹z_k with ⟨x, e_j⟩ = ½ Σ c_k z_k[j] ≡ σ_j / 2
    c = exact.solve_mod2(exact.transpose(z), sigma, len(z))
    if c is None:
        raise ArithmeticError("no ν-fixed representative of s_m")
    ginv = L.gram_inverse
    x = [Fraction(0)] * n
    for ck, zk in zip(c, z):
        if ck:
            d = exact.mat_vec(ginv, zk)
            x = [a + b / 2 for a, b in zip(x, d)]
    return tuple(a / m for a in x)


def dual_fixed_coordinates(nu: Isometry) -> exact.IntMatrix:
    """Integer z_k with G⁻¹z_k a basis of (L')^ν."""
    m = nu.matrix
    inv_t = exact.transpose(exact.inverse(m))
    a = exact.mat_sub(tuple(tuple(int(x) for x in r) for r in inv_t), exact.identity(len(m)))
    return exact.integer_kernel(a, len(m))


def dual_fixed_sublattice(nu: Isometry) -> Sublattice:
    ginv = nu.lattice.gram_inverse
    return Sublattice(nu.lattice, [exact.mat_vec(ginv, z) for z in dual_fixed_coordinates(nu)])


# ---------------------------------------------------------------------------
# Roots and holonomies


@dataclass(frozen=True)
class RootOrbit:
    """A ⟨ν⟩-orbit on the roots, with the η-bit sum around it."""

    indices: tuple[int, ...]
    bit_sum: int

    @property
    def length(self) -> int:
        return len(self.indices)


class RootAction:
    """The permutation of ν on the roots and the η bits on each root."""

    def __init__(self, eta: EtaFunction, roots: Sequence[Sequence[int]]):
        self.roots = [tuple(r) for r in roots]
        index = {r: k for k, r in enumerate(self.roots)}
        nu = eta.nu
        self.perm = []
        for r in self.roots:
            img = tuple(nu.apply(r))
            if img not in index:
                raise ValueError("ν does not preserve the root set")
            self.perm.append(index[img])
        self.bits = [eta.bit(r) for r in self.roots]
        seen = [False] * len(self.roots)
        self.orbits: list[RootOrbit] = []
        for k in range(len(self.roots)):
            if seen[k]:
                continue
            idx, j, s = [], k, 0
            while not seen[j]:
                seen[j] = True
                idx.append(j)
                s += self.bits[j]
                j = self.perm[j]
            self.orbits.append(RootOrbit(tuple(idx), s))


_ACTIONS: dict[int, tuple[EtaFunction, RootAction]] = {}


def root_action(eta: EtaFunction) -> RootAction:
    key = id(eta)
    hit = _ACTIONS.get(key)
    if hit is not None and hit[0] is eta:
        return hit[1]
    from .catalog import roots
    act = RootAction(eta, roots(eta.nu.lattice))
    _ACTIONS[key] = (eta, act)
    return act


def holonomy(g: LiftedAutomorphism, d: int, orbit: RootOrbit) -> tuple[int, Phase]:
    """(k, phase) for the ⟨ν^d⟩-orbits inside a ⟨ν⟩-orbit.

    k is their length and the phase is that of g^{dk} on e_α.
    """
    ell = orbit.length
    k = ell // gcd(ell, d)
    a = root_action(g.eta).roots[orbit.indices[0]]
    turns = d * k // ell
    phase = Fraction(turns * orbit.bit_sum, 2) - d * k * g.pairing(a)
    return k, exact.frac_mod1(phase)


def fixed_rank(nu: Isometry, d: int = 1) -> int:
    return sum(b * gcd(t, d) for t, b in frame_shape(nu).exponents)


def fixed_weight_one_dim(g: LiftedAutomorphism, d: int) -> int:
    """dim of the fixed points of g^d on the weight-one space."""
    act = root_action(g.eta)
    count = 0
    for orb in act.orbits:
        k, ph = holonomy(g, d, orb)
        if ph == 0:
            count += gcd(orb.length, d)
    return fixed_rank(g.nu, d) + count


def eigenvalue_multiplicity(nu: Isometry, phase: Fraction) -> int:
    """Multiplicity of e^{2πi·phase} as an eigenvalue of ν."""
    s = exact.frac_mod1(Fraction(phase)).denominator
    return sum(b for t, b in frame_shape(nu).exponents if t % s == 0)


def eigenspace_dim(g: LiftedAutomorphism, phase: Fraction) -> int:
    """dim of the e^{2πi·phase}-eigenspace of g on the weight-one space."""
    phase = exact.frac_mod1(Fraction(phase))
    act = root_action(g.eta)
    count = 0
    for orb in act.orbits:
        k, ph = holonomy(g, 1, orb)
        if exact.frac_mod1(k * phase - ph) == 0:
            count += 1
    return eigenvalue_multiplicity(g.nu, phase) + count


def fixed_roots(g: LiftedAutomorphism) -> list[tuple[Fraction, ...]]:
    """Roots of the fixed subalgebra: projections of the orbits with trivial holonomy."""
    act = root_action(g.eta)
    out = []
    for orb in act.orbits:
        _, ph = holonomy(g, 1, orb)
        if ph == 0:
            acc = [Fraction(0)] * g.lattice.rank
            for j in orb.indices:
                acc = [x + y for x, y in zip(acc, act.roots[j])]
            out.append(tuple(x / orb.length for x in acc))
    return out


def is_inner(g: LiftedAutomorphism) -> bool:
    """True iff the fixed subalgebra has full rank.

    For ν stabilizing the simple roots the fixed subalgebra has Cartan
    subalgebra h^ν, so its rank is rk(L^ν).
    """
    from .catalog import simple_roots
    from .isometry import stabilizes_simple_roots
    if not stabilizes_simple_roots(g.nu, simple_roots(g.lattice)):
        raise ValueError("is_inner needs ν in normal form (stabilizing the simple roots)")
    return fixed_rank(g.nu) == g.lattice.rank


def has_order_doubling(g: LiftedAutomorphism) -> bool:
    return order_doubling(g.nu)


def power(g: LiftedAutomorphism, d: int) -> LiftedAutomorphism:
    """g^d in normal form: standard lift of ν^d with h' = s_d + d·h."""
    nu_d = g.nu.power(d)
    s = s_vector(g, d)
    h = tuple(x + d * y for x, y in zip(s, g.h))
    return lift(nu_d, h)
