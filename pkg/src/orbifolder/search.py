"""Search for short automorphisms over the finite set of h-vectors, and
comparison of the results with Table 2, the golden tables and the power
tables."""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import catalog, exact
from .isometry import (Fixture, Isometry, frame_shape, identity_isometry, power_equivalence_classes,
                       shipped_fixtures)
from .lattice import coset_order
from .lift import EtaFunction, LiftedAutomorphism, doubling_vector, dual_fixed_sublattice, power, standard_eta
from .orbifold import (OrbifoldReport, fingerprint, gdh_certificate, identify_orbifold, is_short,
                       orbit_lattice_invariants, report, type_of)


def candidate_h_set(nu: Isometry, eta: Optional[EtaFunction] = None,
                    n: Optional[int] = None) -> list[tuple[Fraction, ...]]:
    """Representatives of (s + (1/n)(L')^ν) modulo (L^ν)'.

    s is zero without order doubling and a ν-fixed vector with n·s ≡ s_n
    otherwise. Representatives are listed in lexicographic order of their
    coordinates in the Smith basis of the quotient.
    """
    eta = eta or standard_eta(nu)
    n = n or nu.order
    L = nu.lattice
    s = doubling_vector(eta) if n == nu.order else (Fraction(0),) * L.rank
    if nu.fixed.rank == 0:
        return [s]
    a_rows = [tuple(x / n for x in b) for b in dual_fixed_sublattice(nu).basis]
    big = catalog_sublattice(L, a_rows)
    small = nu.fixed.dual
    m = []
    for b in small.basis:
        c = big.coordinates(b)
        if c is None or any(x.denominator != 1 for x in c):
            raise ArithmeticError("(L^ν)' is not contained in (1/n)(L')^ν")
        m.append([int(x) for x in c])
    snf = exact.smith_normal_form(m)
    vinv = exact.inverse(snf.V)
    a_prime = [big.vector(row) for row in vinv]
    divs = [snf.S[i][i] if i < len(snf.S) else 0 for i in range(len(a_prime))]
    active = [(d, a_prime[i]) for i, d in enumerate(divs) if d != 1]
    if any(d == 0 for d, _ in active):
        raise ArithmeticError("quotient is infinite")
    out = []

    def rec(k, acc):
        if k == len(active):
            out.append(tuple(x + y for x, y in zip(s, acc)))
            return
        d, vec = active[k]
        for c in range(d):
            rec(k + 1, tuple(x + c * y for x, y in zip(acc, vec)))

    rec(0, (Fraction(0),) * L.rank)
    return out


def catalog_sublattice(L, rows):
    from .lattice import Sublattice
    return Sublattice(L, rows)


@dataclass
class ShortClass:
    h: tuple[Fraction, ...]
    members: int
    report: OrbifoldReport


@dataclass
class SearchResult:
    lattice: str
    family: Optional[str]
    frame_shape: str
    n: int
    candidates: int
    short: list[tuple[Fraction, ...]]
    classes: list[ShortClass]  # one per distinct fingerprint
    upper_bound: int  # number of power-equivalence classes
    status: str  # "exact" or "fingerprint"

    @property
    def count(self) -> int:
        return len(self.classes)


def _screen(eta: EtaFunction, n: int, dual_fixed, h) -> bool:
    """Cheap-to-expensive filter: coset order, order of g, then type."""
    if coset_order(h, dual_fixed) != n:
        return False
    g = LiftedAutomorphism(eta, h)
    if g.order != n:
        return False
    return type_of(g) == 0


def _screen_chunk(args):
    label, matrix, n, hs = args
    L = catalog.build_niemeier(label)
    nu = Isometry(L, matrix)
    eta = standard_eta(nu)
    dual_fixed = nu.fixed.dual
    return [_screen(eta, n, dual_fixed, h) for h in hs]


def find_short(nu: Isometry, generators: Optional[Sequence[Isometry]] = None,
               family: Optional[str] = None, jobs: int = 1) -> SearchResult:
    eta = standard_eta(nu)
    n = nu.order
    hs = candidate_h_set(nu, eta)
    dual_fixed = nu.fixed.dual
    if jobs > 1 and len(hs) > 1 and nu.lattice.label:
        chunks = [hs[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            res = list(ex.map(_screen_chunk, [(nu.lattice.label, nu.matrix, n, c) for c in chunks]))
        keep = [False] * len(hs)
        for k, r in enumerate(res):
            for j, ok in enumerate(r):
                keep[k + j * jobs] = ok
    else:
        keep = [_screen(eta, n, dual_fixed, h) for h in hs]
    short_hs = [h for h, ok in zip(hs, keep) if ok]
    parts = power_equivalence_classes(short_hs, nu, generators, n)
    by_fp: dict[tuple, ShortClass] = {}
    for part in parts:
        h = short_hs[part[0]]
        g = LiftedAutomorphism(eta, h)
        rep = report(g, family)
        if not rep.short:
            raise ArithmeticError("screened candidate failed the full short test")
        key = rep.fingerprint
        if key in by_fp:
            by_fp[key].members += 1
        else:
            by_fp[key] = ShortClass(h, 1, rep)
    classes = sorted(by_fp.values(), key=lambda c: c.h)
    status = "exact" if (generators or len(classes) == len(parts)) else "fingerprint"
    return SearchResult(nu.lattice.label or "", family, str(frame_shape(nu)), n, len(hs), short_hs,
                        classes, len(parts), status)


# ---------------------------------------------------------------------------
# Table reproduction


def identity_fixture(label: str) -> Fixture:
    L = catalog.build_niemeier(label)
    nu = identity_isometry(L)
    from .isometry import FrameShape
    return Fixture(f"{label}_A_identity", label, nu, FrameShape(((1, L.rank),)), "A", (),
                   "identity")


def fixtures_for(family: str, label: str) -> list[Fixture]:
    if family == "A":
        return [identity_fixture(label)]
    return [f for f in shipped_fixtures() if f.family == family and f.lattice_label == label]


@dataclass
class CellResult:
    family: str
    label: str
    status: str  # "pass", "fail", "skipped"
    expected_count: Optional[int]
    found_count: Optional[int]
    upper_bound: Optional[int]
    expected_entries: list[int] = field(default_factory=list)
    found_entries: list[Optional[int]] = field(default_factory=list)
    search_status: str = ""
    notes: list[str] = field(default_factory=list)
    search: Optional[SearchResult] = None


def expected_cell(family: str, label: str) -> tuple[int, list[int]]:
    """Table 2 count and the golden multiset of Schellekens numbers for a cell."""
    cell = catalog.table2_cell(label, family)
    entries = []
    for num, mult in catalog.golden_lookup(family, label):
        entries += [num] * mult
    return sum(cell), sorted(entries)


def reproduce_cell(family: str, label: str, jobs: int = 1) -> CellResult:
    fams = catalog.table2()["families"]
    if family not in fams:
        raise KeyError(f"unknown family {family!r}")
    if not catalog.table2_cell(label, family):
        return CellResult(family, label, "skipped", 0, None, None, notes=["empty Table 2 cell"])
    fxs = fixtures_for(family, label)
    exp_count, exp_entries = expected_cell(family, label)
    if not fxs:
        return CellResult(family, label, "skipped", exp_count, None, None, exp_entries,
                          notes=["no fixture for this cell"])
    if len(catalog.golden_columns(family, label)) > 1 or len(catalog.table2_cell(label, family)) > 1:
        return CellResult(family, label, "skipped", exp_count, None, None, exp_entries,
                          notes=["cell has several outer classes; a fixture covers only one"])
    fx = fxs[0]
    res = find_short(fx.isometry, fx.centralizer or None, family, jobs)
    found = sorted((c.report.resolved for c in res.classes), key=lambda x: (x is None, x or 0))
    ok = res.count == exp_count and found == exp_entries and res.upper_bound >= exp_count
    notes = []
    if res.count < exp_count:
        notes.append("missing classes")
    return CellResult(family, label, "pass" if ok else "fail", exp_count, res.count, res.upper_bound,
                      exp_entries, found, res.status, notes, res)


def reproduce_table(family: str, labels: Optional[Sequence[str]] = None, jobs: int = 1) -> list[CellResult]:
    labels = labels or [lab for lab in catalog.NIEMEIER_LABELS if catalog.table2_cell(lab, family)]
    return [reproduce_cell(family, lab, jobs) for lab in labels]


# ---------------------------------------------------------------------------
# Powers


@dataclass
class PowerCheck:
    d: int
    short: bool
    family: Optional[str]
    entry: Optional[int]
    expected: Optional[list[int]]  # None when no stored table covers this power
    ok: bool


def power_checks(g: LiftedAutomorphism, family: str, label: str, row_entry: Optional[int],
                 siblings: Sequence[Optional[int]] = ()) -> list[PowerCheck]:
    """Check g^d for every d | n: short, and identified as the power tables say.

    ``siblings`` are the entries g^p of the other classes in the same cell
    and row, so the stored multiset of targets can be compared.
    """
    out = []
    n = g.order
    for d in exact.divisors(n):
        if d == 1:
            continue
        gd = power(g, d)
        sr = is_short(gd)
        fam_d = catalog.family_of_frame_shape(frame_shape(gd.nu).exponents)
        ident = identify_orbifold(gd, fam_d, label)
        entry = ident.resolved
        expected = None
        ok = sr.short and entry is not None
        if d == n:
            expected = [e for e, _ in catalog.golden_lookup("A", label)]
            ok = ok and entry in expected
        elif row_entry is not None and exact.prime_factors(d) == [d]:
            targets = stored_power_targets(family, d, label, row_entry)
            if targets is not None:
                expected = targets
                ok = ok and entry in targets
        if expected is None and fam_d is not None and entry is not None:
            try:
                allowed = [e for e, _ in catalog.golden_lookup(fam_d, label)]
            except KeyError:
                allowed = []
            ok = ok and entry in allowed
        out.append(PowerCheck(d, sr.short, fam_d, entry, expected, ok))
    return out


def stored_power_targets(family: str, p: int, label: str, row_entry: int) -> Optional[list[int]]:
    """Schellekens numbers listed for g^p of the classes in (row, column)."""
    table = catalog.power_tables().get(family, {}).get(str(p))
    if not table:
        return None
    keys = [k for k in table if k == label or k.split("#")[0] == label]
    if not keys:
        return None
    row = catalog.row_id(family, row_entry)
    targets = []
    for k in keys:
        for t in table[k].get(row, []):
            targets.append(catalog.number_of_row(t)[1])
    return targets or None


def fixture_hash(fx: Fixture) -> str:
    blob = json.dumps([fx.lattice_label, [[str(x) for x in r] for r in fx.isometry.matrix]])
    return hashlib.sha256(blob.encode()).hexdigest()[:16]
