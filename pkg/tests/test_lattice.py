import itertools
from fractions import Fraction
from math import isqrt

from hypothesis import assume, given, settings, strategies as st

from orbifolder import exact
from orbifolder.enumeration import (count_coset_vectors_of_norm, lll_gram, min_coset_norm,
                                    vectors_up_to_norm)
from orbifolder.lattice import (Lattice, Sublattice, coset_order, discriminant_group,
                                fixed_sublattice, orthogonal_complement, sublattice_index, whole)


@st.composite
def even_lattices(draw, max_rank=4):
    n = draw(st.integers(1, max_rank))
    b = draw(st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=n, max_size=n))
    assume(exact.det(b) != 0)
    g = exact.mat_scale(2, exact.mat_mul(b, exact.transpose(b)))
    return Lattice(g)


def box_search(gram, bound, shift=None):
    """All x ∈ Z^n (+ shift) with xᵀGx ≤ bound, by scanning a box from Cauchy-Schwarz."""
    n = len(gram)
    ginv = exact.inverse(gram)
    shift = shift or (Fraction(0),) * n
    ranges = []
    for i in range(n):
        r = isqrt(int(Fraction(bound) * ginv[i][i])) + 1
        c = int(-shift[i])
        ranges.append(range(c - r - 1, c + r + 2))
    out = []
    for x in itertools.product(*ranges):
        v = tuple(a + s for a, s in zip(x, shift))
        q = exact.quadratic_form(gram, v, v)
        if q <= bound:
            out.append((v, q))
    return out


@settings(max_examples=60, deadline=None)
@given(even_lattices(), st.integers(2, 12))
def test_short_vectors_match_box_search(L, bound):
    got = sorted(vectors_up_to_norm(L, bound))
    want = sorted(v for v, q in box_search(L.gram, bound) if q > 0)
    assert got == want


@settings(max_examples=60, deadline=None)
@given(even_lattices(3), st.lists(st.fractions(min_value=-1, max_value=1, max_denominator=4),
                                  min_size=3, max_size=3))
def test_coset_minimum_and_counts_match_box_search(L, h):
    h = tuple(h[:L.rank])
    pts = box_search(L.gram, 16, h)
    m = min_coset_norm(L, h)
    assert m == min(q for _, q in pts)
    for target in sorted({q for _, q in pts})[:3]:
        assert count_coset_vectors_of_norm(L, h, target) == sum(1 for _, q in pts if q == target)


@settings(max_examples=60, deadline=None)
@given(even_lattices())
def test_lll_is_unimodular_change_of_basis(L):
    t, reduced = lll_gram(L.gram)
    assert abs(exact.det(t)) == 1
    assert exact.mat_mul(exact.mat_mul(t, L.gram), exact.transpose(t)) == reduced
    # size reduction: |G'_ij| ≤ G'_jj / 2 for i > j
    assert all(2 * abs(reduced[i][j]) <= reduced[j][j] for i in range(L.rank) for j in range(i))


def test_discriminant_of_a2():
    L = Lattice(((2, -1), (-1, 2)))
    d = discriminant_group(L)
    assert d.order == 3 and d.elementary_divisors == (3,)
    for g in d.generators:
        assert coset_order(g, L) == 3


def test_fixed_and_complement_of_a_swap():
    L = Lattice(((2, 0), (0, 2)))
    swap = ((0, 1), (1, 0))
    fixed = fixed_sublattice(L, swap)
    assert fixed.rank == 1 and fixed.det == 4
    comp = orthogonal_complement(L, fixed)
    assert comp.rank == 1 and comp.det == 4
    assert fixed.dual.det == Fraction(1, 4)


def test_sublattice_index():
    L = Lattice(((2, 0), (0, 2)))
    assert sublattice_index(whole(L), Sublattice(L, ((2, 0), (0, 3)))) == 6


def test_rejects_odd_or_indefinite():
    import pytest
    with pytest.raises(ValueError):
        Lattice(((1, 0), (0, 2)))
    with pytest.raises(ValueError):
        Lattice(((2, 3), (3, 2)))
