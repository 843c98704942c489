from fractions import Fraction

import pytest

from orbifolder import catalog, exact
from orbifolder.isometry import FrameShape, identity_isometry, shipped_fixtures
from orbifolder.lift import LiftedAutomorphism, fixed_weight_one_dim, lift, standard_eta
from orbifolder.orbifold import (c_coeff, c_coeff_system, conformal_weights, defect, fingerprint,
                                 gdh_certificate, identify_orbifold, is_short, orbifold_dim,
                                 orbifold_root_system, orbit_lattice_invariants, oscillator_series,
                                 rank_criterion, report, report_to_dict, twisted_weight_one_dim,
                                 type_of, vacuum_anomaly)

FIXTURES = shipped_fixtures()
IDS = [f.name for f in FIXTURES]

# a short h for the factor swap on E8³, found by the candidate search
SWAP_H = tuple(Fraction(x) for x in
               ["0"] * 16 + ["3", "9/2", "6", "9", "15/2", "6", "4", "2"])


@pytest.fixture(scope="module")
def swap_g(swap_fixture):
    return LiftedAutomorphism(standard_eta(swap_fixture.isometry), SWAP_H)


def test_vacuum_anomaly_values():
    assert vacuum_anomaly(FrameShape(((1, 24),))) == 0
    assert vacuum_anomaly(FrameShape(((1, 8), (2, 8)))) == Fraction(1, 2)
    assert vacuum_anomaly(FrameShape(((2, 12),))) == Fraction(3, 4)
    assert vacuum_anomaly(FrameShape(((1, -1), (2, 1), (5, 1), (10, -1)))) < 1


@pytest.mark.parametrize("n", range(1, 61))
def test_c_coeff_product_matches_linear_system(n):
    system = c_coeff_system(n)
    assert {d: c_coeff(n, d) for d in exact.divisors(n)} == system


def test_c_coeff_spot_values():
    assert (c_coeff(2, 1), c_coeff(2, 2)) == (3, -1)


def test_oscillator_series_of_identity_is_partition_power():
    L = catalog.build_niemeier("A24")
    # Π (1 − y^k)^{−24}: 1, 24, 324, 3200, 25650
    assert oscillator_series(identity_isometry(L), 4) == [1, 24, 324, 3200, 25650]


@pytest.mark.parametrize("fx", FIXTURES, ids=IDS)
def test_defect_is_integral(fx):
    nu = fx.isometry
    for i in exact.divisors(nu.order):
        assert defect(nu.power(i)) >= 1


def test_swap_pipeline(swap_g):
    g = swap_g
    assert g.order == 2
    assert type_of(g) == 0
    assert conformal_weights(g) == [Fraction(1)]
    assert fixed_weight_one_dim(g, 1) == 368
    assert fixed_weight_one_dim(g, 2) == 744
    assert orbifold_dim(g).value == 384 and orbifold_dim(g).exact
    assert rank_criterion(g) and gdh_certificate(g)
    assert is_short(g).short
    ident = identify_orbifold(g, "B")
    assert ident.rank == 16 and ident.resolved == 62
    inv = orbit_lattice_invariants(g)
    assert inv.index == 2 and inv.disc == 4 * inv.fixed_disc


def test_swap_orbifold_root_system(swap_g):
    key = orbifold_root_system(swap_g)
    assert key == catalog.entry_type_key(catalog.schellekens()[62])


def test_twisted_count_closes_dimension_formula(swap_g):
    """For prime n every twisted weight-one vector is g-invariant, so two routes agree."""
    g = swap_g
    tw = sum(twisted_weight_one_dim(g, i) for i in range(1, g.order))
    assert fixed_weight_one_dim(g, 1) + tw == orbifold_dim(g).value


def test_fingerprint_constant_on_dual_translates(swap_g, swap_fixture):
    base = fingerprint(swap_g).as_tuple()
    for b in swap_fixture.isometry.fixed.dual.basis[:3]:
        h = tuple(x + y for x, y in zip(SWAP_H, b))
        g = LiftedAutomorphism(swap_g.eta, h)
        assert fingerprint(g).as_tuple() == base


def test_unshifted_swap_is_not_short(swap_fixture):
    g = lift(swap_fixture.isometry)
    assert not is_short(g).short


@pytest.mark.parametrize("label,entry", [("A1", 70), ("A3", 68), ("A23", 15), ("A24", 1)])
def test_identity_orbifold_is_the_lattice_algebra(label, entry):
    L = catalog.build_niemeier(label)
    g = lift(identity_isometry(L))
    assert is_short(g).short and type_of(g) == 0
    assert orbifold_dim(g).value == 24 + len(catalog.roots(L))
    assert identify_orbifold(g, "A", label).resolved == entry


def test_report_is_serializable(swap_g):
    import json
    d = report_to_dict(report(swap_g, "B"))
    assert d["schellekens_entry"] == 62
    assert d["conformal_weights"] == ["1"]
    assert json.loads(json.dumps(d)) == d
