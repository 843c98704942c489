"""Finite-order lattice isometries: Frame shapes, order doubling, simple-root
stabilization and the equivalence of h-vectors under normalizer elements."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from pathlib import Path
from typing import Iterable, Optional, Sequence

from . import exact
from .lattice import Lattice, Sublattice, fixed_sublattice, matrix_order


@dataclass(frozen=True)
class FrameShape:
    """Exponents b_t of Π_t (x^t − 1)^{b_t}, stored as sorted (t, b_t) pairs."""

    exponents: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d) -> "FrameShape":
        return cls(tuple(sorted((int(t), int(b)) for t, b in dict(d).items() if int(b))))

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    @property
    def degree(self) -> int:
        return sum(t * b for t, b in self.exponents)

    @property
    def order(self) -> int:
        from math import lcm
        return lcm(1, *(t for t, b in self.exponents if b))

    def polynomial_parts(self) -> tuple[exact.Poly, exact.Poly]:
        """(numerator, denominator) products over positive and negative b_t."""
        num, den = (1,), (1,)
        for t, b in self.exponents:
            p = exact.poly_pow(exact.x_power_minus_one(t), abs(b))
            if b > 0:
                num = exact.poly_mul(num, p)
            else:
                den = exact.poly_mul(den, p)
        return num, den

    def __str__(self):
        return " ".join(f"{t}^{b}" for t, b in self.exponents) or "1"


@dataclass(frozen=True, eq=False)
class Isometry:
    lattice: Lattice
    matrix: exact.IntMatrix

    def __post_init__(self):
        m = exact.as_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        n = self.lattice.rank
        if len(m) != n or any(len(r) != n for r in m):
            raise ValueError("isometry matrix has the wrong size")
        g = self.lattice.gram
        if exact.mat_mul(exact.mat_mul(exact.transpose(m), g), m) != g:
            raise ValueError("matrix does not preserve the Gram form")

    @cached_property
    def order(self) -> int:
        return matrix_order(self.matrix)

    def power(self, k: int) -> "Isometry":
        cache = self.__dict__.setdefault("_powers", {})
        k %= self.order
        if k not in cache:
            cache[k] = self if k == 1 else Isometry(self.lattice, exact.mat_pow(self.matrix, k))
        return cache[k]

    def apply(self, v: Sequence) -> tuple:
        return exact.mat_vec(self.matrix, v)

    @cached_property
    def fixed(self) -> Sublattice:
        return fixed_sublattice(self.lattice, self.matrix)

    def __eq__(self, other):
        return isinstance(other, Isometry) and self.lattice == other.lattice and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.lattice, self.matrix))


def identity_isometry(L: Lattice) -> Isometry:
    return Isometry(L, exact.identity(L.rank))


def frame_shape(nu: Isometry) -> FrameShape:
    """Frame shape by Möbius inversion of the cyclotomic multiplicities."""
    cached = nu.__dict__.get("_frame_shape")
    if cached is not None:
        return cached
    cp = exact.char_poly(nu.matrix)
    m = nu.order
    a: dict[int, int] = {}
    rest = cp
    for s in exact.divisors(m):
        phi = exact.cyclotomic(s)
        k = 0
        while True:
            q, r = exact.poly_divmod(rest, phi)
            if any(r):
                break
            rest, k = q, k + 1
        a[s] = k
    if exact.poly_trim(rest) != (1,):
        raise ValueError("characteristic polynomial is not a product of cyclotomic factors of divisors of the order")
    b = {}
    for t in exact.divisors(m):
        bt = sum(exact.mobius(s // t) * a[s] for s in exact.divisors(m) if s % t == 0)
        if bt:
            b[t] = bt
    fs = FrameShape.from_dict(b)
    num, den = fs.polynomial_parts()
    if exact.poly_mul(cp, den) != exact.poly_trim(num):
        raise ValueError("Frame shape verification failed")
    nu.__dict__["_frame_shape"] = fs
    return fs


def order_doubling(nu: Isometry) -> bool:
    """True iff ⟨α, ν^{m/2}α⟩ is odd for some α ∈ L."""
    m = nu.order
    if m % 2:
        return False
    a = exact.mat_mul(nu.lattice.gram, exact.mat_pow(nu.matrix, m // 2))
    n = len(a)
    # α ↦ αᵀAα mod 2 vanishes iff it vanishes on basis vectors and pair sums
    return any(a[i][i] % 2 for i in range(n)) or any(
        (a[i][j] + a[j][i]) % 2 for i in range(n) for j in range(i))


def stabilizes_simple_roots(nu: Isometry, delta: Iterable[Sequence[int]]) -> bool:
    ds = {tuple(d) for d in delta}
    return {tuple(nu.apply(d)) for d in ds} == ds


def power_exponent(tau: Isometry, nu: Isometry) -> int:
    """The i in 1..m with τ·ν·τ⁻¹ = ν^i, or ValueError if τ does not normalize ⟨ν⟩."""
    conj = exact.mat_mul(exact.mat_mul(tau.matrix, nu.matrix), exact.inverse(tau.matrix))
    cur = nu.matrix
    for i in range(1, nu.order + 1):
        if conj == cur:
            return i
        cur = exact.mat_mul(cur, nu.matrix)
    raise ValueError("isometry does not normalize the cyclic group generated by ν")


def reduce_mod_fixed_dual(fixed: Sublattice, h: Sequence) -> tuple[Fraction, ...]:
    """Canonical key of h modulo (L^ν)': its pairings with a basis of L^ν, mod 1."""
    g = fixed.ambient.gram
    return tuple(exact.frac_mod1(Fraction(exact.quadratic_form(g, b, h))) for b in fixed.basis)


def power_equivalence_classes(hs: Sequence[Sequence], nu: Isometry,
                              generators: Optional[Sequence[Isometry]] = None,
                              n: Optional[int] = None) -> list[list[int]]:
    """Partition of the indices of ``hs`` under h ↦ i⁻¹·τh modulo (L^ν)'.

    ``n`` is the order of the automorphisms (defaults to the order of ν);
    i⁻¹ is taken modulo n. Without generators only h ≡ h' mod (L^ν)' is used.
    """
    fixed = nu.fixed
    n = n or nu.order
    for h in hs:
        if tuple(nu.apply(h)) != tuple(Fraction(x) for x in h):
            raise ValueError("h is not fixed by ν")
    maps = []
    for tau in generators or ():
        i = power_exponent(tau, nu)
        if gcd(i, n) != 1:
            raise ValueError("normalizer element does not induce a unit power")
        maps.append((tau, pow(i, -1, n)))
    keys = [reduce_mod_fixed_dual(fixed, h) for h in hs]
    index = {}
    for k, key in enumerate(keys):
        index.setdefault(key, k)
    parent = list(range(len(hs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for k, key in enumerate(keys):
        parent[find(k)] = find(index[key])
    for k, h in enumerate(hs):
        for tau, j in maps:
            image = tuple(j * x for x in tau.apply(h))
            other = index.get(reduce_mod_fixed_dual(fixed, image))
            if other is not None:
                parent[find(k)] = find(other)
    classes: dict[int, list[int]] = {}
    for k in range(len(hs)):
        classes.setdefault(find(k), []).append(k)
    return sorted(classes.values())


# ---------------------------------------------------------------------------
# Fixtures


@dataclass(frozen=True)
class Fixture:
    name: str
    lattice_label: str
    isometry: Isometry
    claimed_frame_shape: FrameShape
    family: Optional[str] = None
    centralizer: tuple[Isometry, ...] = ()
    provenance: str = ""
    extra: dict = field(default_factory=dict, compare=False)


def _int_matrix(rows) -> exact.IntMatrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


def fixture_from_dict(d: dict, name: str = "") -> Fixture:
    """Build and validate a fixture (Gram preservation, Frame shape, Δ-stabilization)."""
    from . import catalog

    label = d["lattice"]
    L = catalog.build_niemeier(label)
    nu = Isometry(L, _int_matrix(d["matrix"]))
    claimed = FrameShape.from_dict(d["claimed_frame_shape"])
    fs = frame_shape(nu)
    if fs != claimed:
        raise ValueError(f"fixture {name}: Frame shape {fs} differs from claimed {claimed}")
    if not stabilizes_simple_roots(nu, catalog.simple_roots(L)):
        raise ValueError(f"fixture {name}: isometry does not stabilize the simple roots")
    cent = tuple(Isometry(L, _int_matrix(m)) for m in d.get("centralizer", []))
    return Fixture(name or d.get("name", ""), label, nu, claimed, d.get("family"), cent,
                   d.get("provenance", ""), {k: v for k, v in d.items() if k not in
                                             ("lattice", "matrix", "claimed_frame_shape", "family",
                                              "centralizer", "provenance", "name")})


def load_fixture(path) -> Fixture:
    path = Path(path)
    return fixture_from_dict(json.loads(path.read_text()), path.stem)


def fixture_to_dict(fx: Fixture) -> dict:
    out = {
        "name": fx.name,
        "lattice": fx.lattice_label,
        "family": fx.family,
        "claimed_frame_shape": {str(t): b for t, b in fx.claimed_frame_shape.exponents},
        "matrix": [[str(x) for x in r] for r in fx.isometry.matrix],
        "provenance": fx.provenance,
    }
    if fx.centralizer:
        out["centralizer"] = [[[str(x) for x in r] for r in c.matrix] for c in fx.centralizer]
    out.update(fx.extra)
    return out


def fixture_dir() -> Path:
    from .catalog import data_dir
    return data_dir() / "fixtures"


def shipped_fixtures() -> list[Fixture]:
    d = fixture_dir()
    if not d.exists():
        return []
    return [load_fixture(p) for p in sorted(d.glob("*.json"))]
