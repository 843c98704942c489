from fractions import Fraction

import pytest

from orbifolder import catalog, exact
from orbifolder.isometry import (FrameShape, Isometry, frame_shape, identity_isometry, order_doubling,
                                 power_equivalence_classes, shipped_fixtures, stabilizes_simple_roots)
from orbifolder.lattice import Lattice, projected_lattice, sublattice_index

FIXTURES = shipped_fixtures()
IDS = [f.name for f in FIXTURES]


def test_every_family_has_a_fixture():
    assert {f.family for f in FIXTURES} >= set("BCDEFGHIJK")


@pytest.mark.parametrize("fx", FIXTURES, ids=IDS)
def test_fixture_frame_shape_and_family(fx):
    fs = frame_shape(fx.isometry)
    assert fs == fx.claimed_frame_shape
    assert fs.degree == 24
    assert catalog.family_of_frame_shape(fs.exponents) == fx.family
    assert fx.isometry.order == fs.order
    assert stabilizes_simple_roots(fx.isometry, catalog.simple_roots(fx.isometry.lattice))


@pytest.mark.parametrize("fx", FIXTURES, ids=IDS)
def test_order_doubling_matches_table1(fx):
    assert order_doubling(fx.isometry) == catalog.frame_classes()[fx.family].order_doubling


@pytest.mark.parametrize("fx", FIXTURES, ids=IDS)
def test_projection_of_lattice_is_dual_of_fixed(fx):
    nu = fx.isometry
    proj = projected_lattice(nu.lattice, nu.matrix, nu.order)
    dual = nu.fixed.dual
    assert proj.rank == dual.rank == sum(b for _, b in fs_pairs(nu))
    # mutual containment, computed in both directions
    assert sublattice_index(proj, dual) == 1
    assert sublattice_index(dual, proj) == 1


def fs_pairs(nu):
    return frame_shape(nu).exponents


def test_frame_shape_of_small_isometries():
    L = Lattice(((2, -1), (-1, 2)))
    rot = Isometry(L, ((0, -1), (1, -1)))  # order-3 rotation of A2
    assert rot.order == 3
    assert frame_shape(rot) == FrameShape(((1, -1), (3, 1)))
    minus = Isometry(L, ((-1, 0), (0, -1)))
    assert frame_shape(minus) == FrameShape(((1, -2), (2, 2)))


def test_rejects_non_isometry():
    L = Lattice(((2, -1), (-1, 2)))
    with pytest.raises(ValueError):
        Isometry(L, ((1, 1), (0, 1)))


def test_order_doubling_on_small_lattice():
    # −1 on A1: ⟨α, −α⟩ = −2 is even, no doubling
    L = Lattice(((2,),))
    assert not order_doubling(Isometry(L, ((-1,),)))
    # swap on A1 ⊕ A1 with a ν^{m/2} = ν: ⟨α, να⟩ = 0, no doubling
    L2 = Lattice(((2, 0), (0, 2)))
    assert not order_doubling(Isometry(L2, ((0, 1), (1, 0))))
    # order-6 element of A2 (negated rotation): ν³ = −1 gives ⟨α, −α⟩ even too
    A2 = Lattice(((2, -1), (-1, 2)))
    assert not order_doubling(Isometry(A2, ((0, 1), (-1, 1))))


def test_power_equivalence_merges_dual_translates():
    # L = 2·Z², so (L^ν)' = L' = ½Z² for ν = 1
    L = Lattice(((2, 0), (0, 2)))
    nu = identity_isometry(L)
    q = Fraction(1, 4)
    hs = [(q, 0), (3 * q, 0), (q, q), (0, q)]
    assert power_equivalence_classes(hs, nu, n=4) == [[0, 1], [2], [3]]
    swap = Isometry(L, ((0, 1), (1, 0)))
    assert power_equivalence_classes(hs, nu, [swap], n=4) == [[0, 1, 3], [2]]
    # −1 normalizes with exponent 1 and maps h to −h ≡ h here
    minus = Isometry(L, ((-1, 0), (0, -1)))
    assert power_equivalence_classes(hs, nu, [minus], n=4) == [[0, 1], [2], [3]]


def test_power_equivalence_rejects_unfixed_h():
    L = Lattice(((2, 0), (0, 2)))
    swap = Isometry(L, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        power_equivalence_classes([(Fraction(1, 2), 0)], swap)
