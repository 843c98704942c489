"""Orbifold invariants of g = ν̂·e^{−2πi·h(0)} on a lattice vertex algebra.

Conformal weights of the twisted sectors come from the vacuum anomaly of the
Frame shape of ν^i plus half the minimal norm of the coset
s_i + i·h + π_{ν^i}(L). The dimension of the orbifold weight-one space comes
from the fixed-point dimensions of the powers of g.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Sequence

from . import catalog, exact
from .enumeration import coset_vectors_up_to_norm, count_coset_vectors_of_norm, min_coset_norm
from .isometry import FrameShape, Isometry, frame_shape, stabilizes_simple_roots
from .lattice import (Sublattice, coinvariant_sublattice, contains, coset_order, project_fixed,
                      projected_lattice, sublattice_from_generators, sublattice_index,
                      subset_with_integral_pairing)
from .lift import (LiftedAutomorphism, eigenspace_dim, fixed_rank, fixed_roots, fixed_weight_one_dim,
                   order_of, power, s_vector)


def vacuum_anomaly(fs: FrameShape) -> Fraction:
    return sum((b * (Fraction(t) - Fraction(1, t)) for t, b in fs.exponents), Fraction(0)) / 24


# ---------------------------------------------------------------------------
# Twisted sectors


@dataclass(frozen=True)
class Sector:
    i: int
    nu: Isometry
    frame_shape: FrameShape
    vacuum_anomaly: Fraction
    coset: tuple[Fraction, ...]  # s_i + i·h
    lattice: Sublattice  # π_{ν^i}(L)
    min_norm: Fraction

    @property
    def conformal_weight(self) -> Fraction:
        return self.vacuum_anomaly + self.min_norm / 2


_PROJECTED: dict = {}


def _projected(nu: Isometry) -> Sublattice:
    key = (nu.lattice.gram, nu.matrix)
    if key not in _PROJECTED:
        _PROJECTED[key] = projected_lattice(nu.lattice, nu.matrix, nu.order)
    return _PROJECTED[key]


def sector(g: LiftedAutomorphism, i: int) -> Sector:
    cache = g.__dict__.setdefault("_sectors", {})
    if i not in cache:
        nu_i = g.nu.power(i)
        fs = frame_shape(nu_i)
        s = s_vector(g, i)
        coset = tuple(a + i * b for a, b in zip(s, g.h))
        lat = _projected(nu_i)
        cache[i] = Sector(i, nu_i, fs, vacuum_anomaly(fs), coset, lat, min_coset_norm(lat, coset))
    return cache[i]


def conformal_weight(g: LiftedAutomorphism, i: int) -> Fraction:
    n = g.order
    if not 1 <= i < n:
        raise ValueError("sector index must satisfy 1 ≤ i ≤ n − 1")
    return sector(g, i).conformal_weight


def type_of(g: LiftedAutomorphism) -> int:
    n = g.order
    if n == 1:
        return 0
    t = n * n * conformal_weight(g, 1)
    if t.denominator != 1:
        raise ArithmeticError(f"n²·ρ = {t} is not an integer")
    return int(t) % n


def conformal_weights(g: LiftedAutomorphism) -> list[Fraction]:
    return [conformal_weight(g, i) for i in range(1, g.order)]


def is_extremal_certified(g: LiftedAutomorphism) -> bool:
    """ρ(V(g^i)) ≥ 1 for every nontrivial power."""
    return all(r >= 1 for r in conformal_weights(g))


# ---------------------------------------------------------------------------
# Dimension formula


def c_coeff(n: int, d: int) -> Fraction:
    """c_n(d) from its Euler-product form."""
    if n < 1 or n % d:
        raise ValueError("d must divide n")
    e = n // d
    val = Fraction(n, d * d)
    for p in exact.prime_factors(d):
        val *= -p
    for p in exact.prime_factors(gcd(d, e)):
        val *= 1 - Fraction(1, p)
    for p in exact.prime_factors(e):
        val *= 1 + Fraction(1, p)
    return val


def c_coeff_system(n: int) -> dict[int, Fraction]:
    """c_n(d) for all d | n from Σ_{d|n} c_n(d)·gcd(t,d) = n/t (t | n)."""
    ds = exact.divisors(n)
    a = [[gcd(t, d) for d in ds] for t in ds]
    b = [Fraction(n, t) for t in ds]
    x = exact.solve_rational(a, b)
    if x is None:
        raise ArithmeticError("singular system for c_n")
    return dict(zip(ds, x))


@dataclass(frozen=True)
class OrbifoldDim:
    value: int
    exact: bool  # False: only an upper bound is certified


def orbifold_dim(g: LiftedAutomorphism) -> OrbifoldDim:
    n = g.order
    if type_of(g) != 0:
        raise ValueError("orbifold dimension needs type 0")
    if n == 1:
        # the orbifold by the identity is V_L itself
        return OrbifoldDim(fixed_weight_one_dim(g, 1), True)
    total = Fraction(g.lattice.rank)
    for d in exact.divisors(n):
        total += c_coeff(n, d) * fixed_weight_one_dim(g, d)
    if total.denominator != 1:
        raise ArithmeticError("dimension formula gave a non-integer")
    return OrbifoldDim(int(total), n == 1 or is_extremal_certified(g))


def rank_criterion(g: LiftedAutomorphism) -> bool:
    """π_ν(s_i) + i·h ∉ π_ν(L) for all i = 1..n−1."""
    nu = g.nu
    lat = _projected(nu)
    for i in range(1, g.order):
        v = project_fixed(nu.matrix, s_vector(g, i), nu.order)
        v = tuple(a + i * b for a, b in zip(v, g.h))
        if contains(lat, v):
            return False
    return True


@dataclass(frozen=True)
class ShortResult:
    short: bool
    reasons: tuple[str, ...]


def is_short(g: LiftedAutomorphism) -> ShortResult:
    reasons = []
    n = g.order
    if n != g.nu.order:
        reasons.append(f"order: g has order {n}, ν has order {g.nu.order}")
    k = coset_order(g.h, g.nu.fixed.dual)
    if k != n:
        reasons.append(f"coset_order: h has order {k} modulo (N^ν)', g has order {n}")
    if type_of(g) != 0:
        reasons.append(f"type: g has type {type_of(g)}")
    return ShortResult(not reasons, tuple(reasons))


def gdh_certificate(g: LiftedAutomorphism) -> bool:
    if type_of(g) != 0:
        return False
    return is_extremal_certified(g) and rank_criterion(g)


# ---------------------------------------------------------------------------
# Orbit lattice


@dataclass(frozen=True)
class OrbitLattice:
    index: int
    disc: int
    fixed_disc: int


def orbit_lattice_invariants(g: LiftedAutomorphism) -> OrbitLattice:
    """[N^ν : N^{ν,h}] and |disc N^{ν,h}|, with N^{ν,h} = {α ∈ N^ν : ⟨α,h⟩ ∈ Z}."""
    fixed = g.nu.fixed
    sub = subset_with_integral_pairing(fixed, g.h)
    index = sublattice_index(fixed, sub) if fixed.rank else 1
    if index != g.order:
        raise ArithmeticError(f"[N^ν : N^(ν,h)] = {index} differs from n = {g.order}")
    return OrbitLattice(index, int(sub.det), int(fixed.det))


# ---------------------------------------------------------------------------
# Twisted weight-one spaces


def defect(nu: Isometry) -> int:
    """d(ν) with d(ν)² = |L_ν / (1 − ν)L|."""
    L = nu.lattice
    co = coinvariant_sublattice(L, nu.matrix)
    if co.rank == 0:
        return 1
    a = exact.mat_sub(exact.identity(L.rank), nu.matrix)
    image = sublattice_from_generators(L, exact.transpose(a))
    d2 = sublattice_index(co, image)
    d = isqrt(d2)
    if d * d != d2:
        raise ArithmeticError(f"defect square {d2} is not a square")
    return d


def oscillator_series(nu: Isometry, top: int) -> list[int]:
    """Coefficients of Π_j Π_{k≥0} (1 − y^{k·m + j})^{−a_j} up to y^top, y = x^{1/m}.

    a_j is the multiplicity of the eigenvalue e^{2πi·j/m} of ν (j = 1..m).
    """
    from .lift import eigenvalue_multiplicity
    m = nu.order
    coeffs = [1] + [0] * top
    for j in range(1, m + 1):
        a = eigenvalue_multiplicity(nu, Fraction(j, m))
        if not a:
            continue
        e = j
        while e <= top:
            for _ in range(a):
                # multiply by 1/(1 − y^e)
                for k in range(e, top + 1):
                    coeffs[k] += coeffs[k - e]
            e += m
    return coeffs


def _twisted_levels(g: LiftedAutomorphism, i: int):
    """(oscillator degree q, multiplicity, target norm 2(1 − ρ_ν − q)) with target ≥ 0."""
    sec = sector(g, i)
    m = sec.nu.order
    room = 1 - sec.vacuum_anomaly
    if room < 0:
        return []
    top = int(room * m)
    series = oscillator_series(sec.nu, top)
    return [(Fraction(k, m), series[k], 2 * (room - Fraction(k, m))) for k in range(top + 1) if series[k]]


def twisted_weight_one_dim(g: LiftedAutomorphism, i: int) -> int:
    """dim of the weight-one space of the g^i-twisted module."""
    sec = sector(g, i)
    d = defect(sec.nu)
    total = 0
    for q, mult, target in _twisted_levels(g, i):
        total += mult * count_coset_vectors_of_norm(sec.lattice, sec.coset, target)
    return d * total


def twisted_roots(g: LiftedAutomorphism, i: int) -> list[tuple[Fraction, ...]]:
    """Nonzero weights β of weight-one vectors in the g^i-twisted module."""
    sec = sector(g, i)
    levels = _twisted_levels(g, i)
    if not levels:
        return []
    targets = {t for _, _, t in levels}
    bound = max(targets)
    out = []
    for v, nrm in coset_vectors_up_to_norm(sec.lattice, sec.coset, bound):
        if nrm in targets and nrm > 0:
            out.append(v)
    return out


def _type_key(roots: Sequence, rank: int, gram) -> tuple:
    names = catalog.classify_root_vectors(roots, gram)
    ss = sum(int(s[1:]) for s in names)
    return catalog.lie_type_key(names, rank - ss)


def fixed_algebra_type(g: LiftedAutomorphism) -> tuple:
    return _type_key(fixed_roots(g), fixed_rank(g.nu), g.lattice.gram)


def orbifold_root_system(g: LiftedAutomorphism) -> tuple:
    """Type of the orbifold weight-one Lie algebra, for g of prime order.

    Its Cartan subalgebra is h^ν; the roots are those of the fixed
    subalgebra together with the nonzero weights of the twisted sectors.
    """
    n = g.order
    if n == 1:
        return _type_key(catalog.roots(g.lattice), g.lattice.rank, g.lattice.gram)
    if len(exact.prime_factors(n)) != 1 or exact.prime_factors(n)[0] != n:
        raise ValueError("the orbifold root system is only computed for prime order")
    rs = list(fixed_roots(g))
    for i in range(1, n):
        rs += twisted_roots(g, i)
    return _type_key(rs, fixed_rank(g.nu), g.lattice.gram)


def coprime_sector_roots(g: LiftedAutomorphism) -> list[tuple[Fraction, ...]]:
    """Roots of the orbifold algebra visible without splitting sectors by eigenvalue.

    These are the fixed roots together with the nonzero weight-one weights of
    the g^i-twisted sectors with gcd(i, n) = 1, all of which are g-invariant
    for type 0. For prime n this is the whole root system.
    """
    n = g.order
    rs = set(fixed_roots(g))
    for i in range(1, n):
        if gcd(i, n) == 1:
            rs.update(twisted_roots(g, i))
    return sorted(rs)


def root_norm_profile(g: LiftedAutomorphism) -> Counter:
    gram = g.lattice.gram
    return Counter(Fraction(exact.quadratic_form(gram, r, r)) for r in coprime_sector_roots(g))


# ---------------------------------------------------------------------------
# Identification and fingerprint


@dataclass(frozen=True)
class Identification:
    dim: int
    dim_exact: bool
    rank: Optional[int]
    candidates: tuple[int, ...]
    resolved: Optional[int]
    method: str


def _is_prime(n: int) -> bool:
    return n > 1 and exact.prime_factors(n) == [n]


def identify_orbifold(g: LiftedAutomorphism, family: Optional[str] = None,
                      label: Optional[str] = None) -> Identification:
    od = orbifold_dim(g)
    rank = fixed_rank(g.nu) if rank_criterion(g) else None
    if rank is None:
        return Identification(od.value, od.exact, None, (), None, "no-rank")
    cands = tuple(e.number for e in catalog.schellekens_candidates(od.value, rank))
    if not cands:
        raise ValueError(f"no Schellekens entry with dim {od.value} and rank {rank}")
    if len(cands) == 1:
        return Identification(od.value, od.exact, rank, cands, cands[0], "dim-rank")
    if _is_prime(g.order):
        key = orbifold_root_system(g)
        sch = catalog.schellekens()
        hits = tuple(c for c in cands if catalog.entry_type_key(sch[c]) == key)
        if len(hits) == 1:
            return Identification(od.value, od.exact, rank, cands, hits[0], "root-system")
        if hits:
            cands = hits
    else:
        # every root seen in the coprime sectors is a root of the orbifold
        # algebra, with long roots of a level-k summand of norm 2/k
        prof = root_norm_profile(g)
        sch = catalog.schellekens()
        hits = tuple(c for c in cands if not prof - catalog.entry_root_norms(sch[c]))
        if len(hits) == 1:
            return Identification(od.value, od.exact, rank, cands, hits[0], "root-norms")
        if hits:
            cands = hits
    if family is None:
        family = catalog.family_of_frame_shape(frame_shape(g.nu).exponents)
    label = label or g.lattice.label
    if family and label:
        try:
            allowed = {num for num, _ in catalog.golden_lookup(family, label)}
        except KeyError:
            allowed = set()
        hits = tuple(c for c in cands if c in allowed)
        if len(hits) == 1:
            return Identification(od.value, od.exact, rank, cands, hits[0], "golden")
    return Identification(od.value, od.exact, rank, cands, None, "ambiguous")


@dataclass(frozen=True)
class Fingerprint:
    n: int
    type_zero: bool
    extremal: bool
    fixed_dim: int
    fixed_type: str
    orbifold: str
    eigenspace_dim: int

    def as_tuple(self) -> tuple:
        return (self.n, self.type_zero, self.extremal, self.fixed_dim, self.fixed_type,
                self.orbifold, self.eigenspace_dim)


def fingerprint(g: LiftedAutomorphism, ident: Optional[Identification] = None) -> Fingerprint:
    n = g.order
    ident = ident or identify_orbifold(g)
    orb = str(ident.resolved) if ident.resolved is not None else "|".join(map(str, ident.candidates))
    return Fingerprint(n, type_of(g) == 0, n == 1 or is_extremal_certified(g),
                       fixed_weight_one_dim(g, 1), catalog.format_lie_type(fixed_algebra_type(g)),
                       orb, eigenspace_dim(g, Fraction(1, n)))


# ---------------------------------------------------------------------------
# Report


@dataclass(frozen=True)
class OrbifoldReport:
    lattice: str
    frame_shape: str
    n: int
    type: int
    conformal_weights: tuple[Fraction, ...]
    fixed_dims: dict
    short: bool
    short_reasons: tuple[str, ...]
    gdh: bool
    rank_criterion: bool
    orbifold_dim: Optional[int]
    orbifold_dim_exact: bool
    orbifold_rank: Optional[int]
    candidates: tuple[int, ...]
    resolved: Optional[int]
    resolution: str
    fingerprint: Optional[tuple]
    orbit_lattice: Optional[dict] = field(default=None)


def report(g: LiftedAutomorphism, family: Optional[str] = None) -> OrbifoldReport:
    n = g.order
    t = type_of(g)
    fixed_dims = {d: fixed_weight_one_dim(g, d) for d in exact.divisors(n)}
    sr = is_short(g)
    rc = rank_criterion(g)
    if t == 0:
        ident = identify_orbifold(g, family)
        fp = fingerprint(g, ident).as_tuple()
        gdh = gdh_certificate(g)
    else:
        ident, fp, gdh = None, None, False
    ol = None
    if sr.short:
        inv = orbit_lattice_invariants(g)
        ol = {"index": inv.index, "disc": inv.disc, "fixed_disc": inv.fixed_disc}
    return OrbifoldReport(
        lattice=g.lattice.label or "",
        frame_shape=str(frame_shape(g.nu)),
        n=n, type=t,
        conformal_weights=tuple(conformal_weights(g)),
        fixed_dims=fixed_dims,
        short=sr.short, short_reasons=sr.reasons,
        gdh=gdh, rank_criterion=rc,
        orbifold_dim=ident.dim if ident else None,
        orbifold_dim_exact=ident.dim_exact if ident else False,
        orbifold_rank=ident.rank if ident else None,
        candidates=ident.candidates if ident else (),
        resolved=ident.resolved if ident else None,
        resolution=ident.method if ident else "type-nonzero",
        fingerprint=fp, orbit_lattice=ol)


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def report_to_dict(r: OrbifoldReport) -> dict:
    return {
        "lattice": r.lattice,
        "frame_shape": r.frame_shape,
        "n": r.n,
        "type": r.type,
        "conformal_weights": [frac_str(x) for x in r.conformal_weights],
        "fixed_dims": {str(d): v for d, v in sorted(r.fixed_dims.items())},
        "short": r.short,
        "short_reasons": list(r.short_reasons),
        "gdh_certificate": r.gdh,
        "rank_criterion": r.rank_criterion,
        "orbifold_dim": r.orbifold_dim,
        "orbifold_dim_exact": r.orbifold_dim_exact,
        "orbifold_rank": r.orbifold_rank,
        "schellekens_candidates": list(r.candidates),
        "schellekens_entry": r.resolved,
        "resolution": r.resolution,
        "fingerprint": list(r.fingerprint) if r.fingerprint else None,
        "orbit_lattice": r.orbit_lattice,
    }
