import cmath
import random
from fractions import Fraction

import pytest

from orbifolder import catalog, exact
from orbifolder.isometry import Isometry, frame_shape, identity_isometry, order_doubling, shipped_fixtures
from orbifolder.lattice import Lattice
from orbifolder.lift import (cocycle, eta_power_bit, fixed_weight_one_dim, lift, order_of, power, s_vector,
                             standard_eta)

FIXTURES = shipped_fixtures()
IDS = [f.name for f in FIXTURES]


def unit(n, k):
    return tuple(int(i == k) for i in range(n))


@pytest.mark.parametrize("label", ["A1", "A3", "A12", "A23", "A24"])
def test_cocycle_alternation_on_basis_pairs(label):
    L = catalog.build_niemeier(label)
    eps = cocycle(L)
    n = L.rank
    for i in range(n):
        ei = unit(n, i)
        for j in range(n):
            ej = unit(n, j)
            assert eps.value(ei, ej) * eps.value(ej, ei) == (-1) ** L.gram[i][j]


@pytest.mark.parametrize("fx", FIXTURES, ids=IDS)
def test_eta_satisfies_the_lift_relation(fx):
    """η(α+β)/(η(α)η(β)) = ε(να,νβ)/ε(α,β) on random pairs."""
    nu = fx.isometry
    eta = standard_eta(nu)
    eps = cocycle(nu.lattice)
    rng = random.Random(fx.name)
    n = nu.lattice.rank
    for _ in range(30):
        a = tuple(rng.randint(-2, 2) for _ in range(n))
        b = tuple(rng.randint(-2, 2) for _ in range(n))
        ab = tuple(x + y for x, y in zip(a, b))
        lhs = eta.value(ab) * eta.value(a) * eta.value(b)
        rhs = eps.value(nu.apply(a), nu.apply(b)) * eps.value(a, b)
        assert lhs == rhs


@pytest.mark.parametrize("fx", FIXTURES, ids=IDS)
def test_standard_lift_is_trivial_on_fixed_lattice(fx):
    eta = standard_eta(fx.isometry)
    for b in fx.isometry.fixed.basis:
        assert eta.bit([int(x) for x in b]) == 0


@pytest.mark.parametrize("fx", FIXTURES, ids=IDS)
def test_standard_lift_order_law(fx):
    nu = fx.isometry
    m = nu.order
    g = lift(nu)
    expected = 2 * m if catalog.frame_classes()[fx.family].order_doubling else m
    assert order_of(g) == expected
    assert (order_of(g) == 2 * m) == order_doubling(nu)


def brute_order(g, limit=200):
    """Smallest k with ν^k = 1 and ν̂^k·e^{−2πik⟨h,·⟩} trivial on every basis vector."""
    n = g.lattice.rank
    for k in range(1, limit):
        if k % g.nu.order:
            continue
        if all(exact.frac_mod1(Fraction(eta_power_bit(g.eta, k, unit(n, j)), 2) - k * g.pairing(unit(n, j))) == 0
               for j in range(n)):
            return k
    raise AssertionError("order not found")


@pytest.mark.parametrize("fx", FIXTURES[:6], ids=IDS[:6])
def test_order_of_against_iteration(fx):
    g = lift(fx.isometry)
    assert order_of(g) == brute_order(g)


@pytest.mark.parametrize("fx", FIXTURES, ids=IDS)
def test_s_vector_reproduces_signs(fx):
    """e^{−2πi⟨s_i,α⟩} equals the sign of ν̂^i on α ∈ L^{ν^i}."""
    nu = fx.isometry
    eta = standard_eta(nu)
    g = nu.lattice.gram
    for i in exact.divisors(nu.order):
        s = s_vector(eta, i)
        assert nu.power(i).apply(s) == s
        for b in nu.power(i).fixed.basis:
            a = [int(x) for x in b]
            assert exact.frac_mod1(Fraction(exact.quadratic_form(g, s, a))) == Fraction(eta_power_bit(eta, i, a), 2)


def weight_one_fixed_dim_by_traces(g, d):
    """dim of the g^d-fixed weight-one space as the average of traces over ⟨g^d⟩."""
    L = g.lattice
    roots = catalog.roots(L)
    n = L.rank
    order = g.order // exact.gcd_list([g.order, d])
    total = 0
    for j in range(order):
        k = d * j
        mk = g.nu.power(k)
        tr = sum(mk.matrix[i][i] for i in range(n))
        for a in roots:
            if mk.apply(a) == tuple(a):
                sign = -1 if eta_power_bit(g.eta, k, a) else 1
                tr += sign * cmath.exp(-2j * cmath.pi * float(k * g.pairing(a)))
        total += tr
    val = total / order
    assert abs(val.imag) < 1e-6
    return round(val.real)


@pytest.mark.parametrize("name", ["A3_B_swap", "A23_D", "A23_C", "A23_E"])
def test_fixed_weight_one_dim_by_two_routes(name):
    fx = next(f for f in FIXTURES if f.name == name)
    g = lift(fx.isometry)
    for d in exact.divisors(g.order):
        assert fixed_weight_one_dim(g, d) == weight_one_fixed_dim_by_traces(g, d)


def test_swap_fixed_dimension(swap_fixture):
    g = lift(swap_fixture.isometry)
    assert fixed_weight_one_dim(g, 1) == 496  # E8 ⊕ diagonal E8
    assert fixed_weight_one_dim(g, 2) == 744


def permuted(fx, seed):
    """The fixture written in a permuted basis: G' = PᵀGP, ν' = P⁻¹νP."""
    L = fx.isometry.lattice
    n = L.rank
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    p = tuple(tuple(int(perm[j] == i) for j in range(n)) for i in range(n))
    pt = exact.transpose(p)
    L2 = Lattice(exact.mat_mul(exact.mat_mul(pt, L.gram), p))
    nu2 = Isometry(L2, exact.mat_mul(exact.mat_mul(pt, fx.isometry.matrix), p))
    return nu2, pt


@pytest.mark.parametrize("name", ["A3_B_swap", "A23_D", "A23_G", "A24_K"])
def test_fixed_weight_one_dim_is_basis_independent(name):
    fx = next(f for f in FIXTURES if f.name == name)
    g = lift(fx.isometry)
    nu2, pt = permuted(fx, name)
    assert frame_shape(nu2) == frame_shape(fx.isometry)
    g2 = lift(nu2, exact.mat_vec(pt, g.h))
    assert g2.order == g.order
    for d in exact.divisors(g.order):
        assert fixed_weight_one_dim(g2, d) == fixed_weight_one_dim(g, d)


@pytest.mark.parametrize("fx", FIXTURES, ids=IDS)
def test_powers_have_consistent_orders(fx):
    g = lift(fx.isometry)
    for d in exact.divisors(g.order):
        gd = power(g, d)
        assert gd.order == g.order // d
        assert fixed_weight_one_dim(gd, 1) == fixed_weight_one_dim(g, d)


def test_identity_lift():
    L = catalog.build_niemeier("A1")
    g = lift(identity_isometry(L))
    assert g.order == 1
    assert fixed_weight_one_dim(g, 1) == 24 + 1104
    with pytest.raises(ValueError):
        lift(Isometry(Lattice(((2, 0), (0, 2))), ((0, 1), (1, 0))), (Fraction(1, 2), 0))
