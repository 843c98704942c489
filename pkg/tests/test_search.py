from fractions import Fraction

import pytest

from orbifolder import catalog, search
from orbifolder.isometry import identity_isometry
from orbifolder.lattice import contains, coset_order
from orbifolder.lift import LiftedAutomorphism, standard_eta
from orbifolder.orbifold import gdh_certificate, is_short, orbit_lattice_invariants

from conftest import fixture_named


def test_identity_candidate_set():
    nu = identity_isometry(catalog.build_niemeier("A24"))
    assert search.candidate_h_set(nu) == [(Fraction(0),) * 24]


def test_swap_candidate_set(swap_fixture):
    nu = swap_fixture.isometry
    hs = search.candidate_h_set(nu)
    assert len(hs) == 2 ** 8
    dual = nu.fixed.dual
    # representatives are ν-fixed, of order dividing 2, and pairwise distinct modulo (N^ν)'
    for h in hs:
        assert nu.apply(h) == h
        assert coset_order(h, dual) in (1, 2)
    for a in hs[:20]:
        for b in hs[:20]:
            if a != b:
                assert not contains(dual, tuple(x - y for x, y in zip(a, b)))


def test_doubling_candidates_have_the_right_order():
    fx = fixture_named("A24_K")
    nu = fx.isometry
    eta = standard_eta(nu)
    for h in search.candidate_h_set(nu, eta):
        assert LiftedAutomorphism(eta, h).order == nu.order


@pytest.fixture(scope="module")
def leech_k():
    fx = fixture_named("A24_K")
    return fx, search.find_short(fx.isometry, None, fx.family)


def test_find_short_leech_k(leech_k):
    fx, res = leech_k
    assert res.count == 1
    assert [c.report.resolved for c in res.classes] == [4]
    assert res.upper_bound >= res.count
    assert res.status in ("exact", "fingerprint")
    assert search.expected_cell("K", "A24") == (1, [4])


def test_every_short_candidate_passes_full_checks(leech_k):
    fx, res = leech_k
    eta = standard_eta(fx.isometry)
    for h in res.short:
        g = LiftedAutomorphism(eta, h)
        assert is_short(g).short
        assert gdh_certificate(g)
        assert orbit_lattice_invariants(g).index == g.order


def test_power_checks_leech_k(leech_k):
    fx, res = leech_k
    g = LiftedAutomorphism(standard_eta(fx.isometry), res.classes[0].h)
    checks = search.power_checks(g, "K", "A24", 4)
    assert [c.d for c in checks] == [2, 5, 10]
    assert all(c.short and c.ok for c in checks)
    assert checks[-1].entry == 1  # g^n is the identity: V_Λ itself


def test_reproduce_cell_skips():
    assert search.reproduce_cell("B", "A1").status == "skipped"  # empty cell
    assert search.reproduce_cell("B", "A21").status == "skipped"  # several outer classes, no fixture
    with pytest.raises(KeyError):
        search.reproduce_cell("Z", "A1")


def test_reproduce_identity_cell():
    r = search.reproduce_cell("A", "A12")
    assert r.status == "pass" and r.found_entries == r.expected_entries


def test_stored_power_targets():
    t = search.stored_power_targets("E", 2, "A13", catalog.number_of_row("E1")[1])
    assert t == [catalog.number_of_row("B7")[1]]


def test_fixture_hash_is_stable():
    fx = fixture_named("A24_K")
    assert search.fixture_hash(fx) == search.fixture_hash(fixture_named("A24_K"))
    assert len(search.fixture_hash(fx)) == 16


A1_24_FAMILIES = ["B", "C", "D", "E", "F", "G", "H", "I", "K"]


@pytest.mark.slow
@pytest.mark.parametrize("family", A1_24_FAMILIES)
def test_reproduce_a1_24_cells(family):
    """Every A1^24 fixture cell, including cells with several classes per isometry."""
    r = search.reproduce_cell(family, "A23")
    assert r.status == "pass", r
    assert r.found_entries == r.expected_entries
    for c in r.search.classes:
        assert c.report.resolution != "ambiguous"
