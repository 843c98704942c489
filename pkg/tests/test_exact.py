import itertools
from fractions import Fraction

import sympy
from sympy.matrices.normalforms import hermite_normal_form as sympy_hnf
from hypothesis import given, settings, strategies as st

from orbifolder import exact

small_ints = st.integers(min_value=-6, max_value=6)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)))


def brute_elementary_divisors(m):
    """d_k = D_k / D_{k-1}, with D_k the gcd of all k×k minors."""
    r, c = len(m), len(m[0])
    out, prev = [], 1
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in itertools.combinations(range(r), k):
            for cols in itertools.combinations(range(c), k):
                g = exact.gcd_list([g, exact.det([[m[i][j] for j in cols] for i in rows])])
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_smith_against_minors(m):
    snf = exact.smith_normal_form(m)
    assert exact.mat_mul(exact.mat_mul(snf.U, m), snf.V) == snf.S
    assert abs(exact.det(snf.U)) == 1 and abs(exact.det(snf.V)) == 1
    diag = [d for d in snf.diagonal if d]
    assert diag == brute_elementary_divisors(m)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_hermite_against_sympy(m):
    h = exact.hermite_normal_form(m)
    nonzero = [r for r in h if any(r)]
    assert len(nonzero) == sympy.Matrix(m).rank()
    if nonzero:
        # same row lattice: sympy's canonical column HNF of the transposes agrees
        assert sympy_hnf(sympy.Matrix(m).T) == sympy_hnf(sympy.Matrix(nonzero).T)
        for row in m:
            assert exact.in_integer_span(nonzero, row)
    # echelon shape with positive pivots
    pivots = [next(j for j, x in enumerate(r) if x) for r in nonzero]
    assert pivots == sorted(set(pivots))
    assert all(r[p] > 0 for r, p in zip(nonzero, pivots))


@settings(max_examples=100, deadline=None)
@given(matrices(4, 4).filter(lambda m: len(m) == len(m[0])))
def test_det_and_inverse_against_sympy(m):
    d = exact.det(m)
    assert d == sympy.Matrix(m).det()
    if d:
        inv = exact.inverse(m)
        assert exact.mat_mul(inv, m) == exact.identity(len(m))


@settings(max_examples=100, deadline=None)
@given(matrices(4, 4).filter(lambda m: len(m) == len(m[0])))
def test_char_poly_against_sympy(m):
    x = sympy.Symbol("x")
    coeffs = sympy.Matrix(m).charpoly(x).all_coeffs()[::-1]
    assert exact.char_poly(m) == tuple(int(c) for c in coeffs)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(0, 1), min_size=5, max_size=5), min_size=1, max_size=5),
       st.lists(st.integers(0, 1), min_size=5, max_size=5))
def test_solve_mod2_against_brute_force(a, x0):
    b = [sum(r * x for r, x in zip(row, x0)) % 2 for row in a]
    x = exact.solve_mod2(a, b, 5)
    assert x is not None
    assert [sum(r * y for r, y in zip(row, x)) % 2 for row in a] == b


def test_solve_mod2_inconsistent():
    assert exact.solve_mod2([[1, 0], [1, 0]], [0, 1]) is None


def test_cyclotomic_and_mobius():
    assert exact.cyclotomic(1) == (-1, 1)
    assert exact.cyclotomic(6) == (1, -1, 1)
    assert [exact.mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert exact.divisors(12) == [1, 2, 3, 4, 6, 12]
    for n in range(1, 40):
        prod = (1,)
        for d in exact.divisors(n):
            prod = exact.poly_mul(prod, exact.cyclotomic(d))
        assert prod == exact.x_power_minus_one(n)


def test_frac_mod1():
    assert exact.frac_mod1(Fraction(-1, 3)) == Fraction(2, 3)
    assert exact.frac_mod1(Fraction(7, 2)) == Fraction(1, 2)
