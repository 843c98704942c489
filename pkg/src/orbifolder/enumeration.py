"""Exact short-vector and closest-vector enumeration.

The quadratic form is reduced (exact LLL on the Gram matrix) and written as
Q(y) = Σ_j B_j·(y_j + Σ_{i>j} μ_ij·y_i)², then integer points are visited
depth first with the last coordinate outermost. All bounds are rational
comparisons carried out with gmpy2's ``mpq``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from gmpy2 import isqrt, mpq, mpz

from . import exact
from .lattice import Lattice, Sublattice

_HALF = mpq(1, 2)


def _to_mpq(x) -> mpq:
    x = Fraction(x)
    return mpq(x.numerator, x.denominator)


def _to_fraction(x: mpq) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _round(x: mpq) -> int:
    # nearest integer, ties toward +infinity
    return int((x + _HALF).__floor__())


def lll_gram(gram: Sequence[Sequence], delta: Fraction = Fraction(99, 100)):
    """Exact LLL reduction of a positive-definite Gram matrix.

    Returns (T, G') with G' = T·G·Tᵀ and T unimodular.
    """
    n = len(gram)
    g = [[_to_mpq(x) for x in r] for r in gram]
    t = [[int(i == j) for j in range(n)] for i in range(n)]
    if n <= 1:
        return exact.as_matrix(t), exact.as_matrix([[_to_fraction(x) for x in r] for r in g])
    dlt = _to_mpq(delta)
    mu = [[mpq(0)] * n for _ in range(n)]
    B = [mpq(0)] * n
    B[0] = g[0][0]
    k, kmax = 1, 0

    def red(k, l):
        if abs(mu[k][l]) <= _HALF:
            return
        q = _round(mu[k][l])
        gkl, gll = g[k][l], g[l][l]
        for j in range(n):
            if j != k:
                g[k][j] -= q * g[l][j]
                g[j][k] = g[k][j]
        g[k][k] += -2 * q * gkl + q * q * gll
        t[k] = [a - q * b for a, b in zip(t[k], t[l])]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    def swap(k):
        g[k], g[k - 1] = g[k - 1], g[k]
        for row in g:
            row[k], row[k - 1] = row[k - 1], row[k]
        t[k], t[k - 1] = t[k - 1], t[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        bb = B[k] + m * m * B[k - 1]
        mu[k][k - 1] = m * B[k - 1] / bb
        B[k] = B[k - 1] * B[k] / bb
        B[k - 1] = bb
        for i in range(k + 1, kmax + 1):
            tt = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * tt
            mu[i][k - 1] = tt + mu[k][k - 1] * mu[i][k]

    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k):
                s = g[k][j]
                for i in range(j):
                    s -= mu[j][i] * mu[k][i] * B[i]
                mu[k][j] = s / B[j]
            s = g[k][k]
            for j in range(k):
                s -= mu[k][j] * mu[k][j] * B[j]
            B[k] = s
        red(k, k - 1)
        if B[k] < (dlt - mu[k][k - 1] ** 2) * B[k - 1]:
            swap(k)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return exact.as_matrix(t), exact.as_matrix([[_to_fraction(x) for x in r] for r in g])


def _gram_schmidt(g: Sequence[Sequence[mpq]]):
    n = len(g)
    mu = [[mpq(0)] * n for _ in range(n)]
    B = [mpq(0)] * n
    for i in range(n):
        for j in range(i):
            s = g[i][j]
            for k in range(j):
                s -= mu[j][k] * mu[i][k] * B[k]
            mu[i][j] = s / B[j]
        s = g[i][i]
        for j in range(i):
            s -= mu[i][j] * mu[i][j] * B[j]
        B[i] = s
    return mu, B


def _ceil(x: mpq) -> int:
    return int(-((-x).__floor__()))


def _interval(z: mpq, t: mpq) -> tuple[int, int]:
    """Integers y with (y − z)² ≤ t, as an inclusive range (lo > hi if empty)."""
    if t < 0:
        return 1, 0
    # rough square root from the integer part, then exact correction
    r = int(isqrt(mpz(t.numerator) // mpz(t.denominator)))
    lo = _ceil(z) - r - 1
    while (lo - z) ** 2 > t and lo <= z:
        lo += 1
    while (lo - 1 - z) ** 2 <= t:
        lo -= 1
    hi = int(z.__floor__()) + r + 1
    while (hi - z) ** 2 > t and hi >= z:
        hi -= 1
    while (hi + 1 - z) ** 2 <= t:
        hi += 1
    if (lo - z) ** 2 > t:
        return 1, 0
    return lo, hi


class Enumerator:
    """Prepared enumeration data for one positive-definite Gram matrix."""

    def __init__(self, gram: Sequence[Sequence]):
        self.n = len(gram)
        self.T, reduced = lll_gram(gram)
        self.reduced = reduced
        g = [[_to_mpq(x) for x in r] for r in reduced]
        self.mu, self.B = _gram_schmidt(g)
        # columns of (Tᵀ)⁻¹ map old coordinates to new ones
        self.T_inv_t = exact.transpose(exact.inverse(self.T)) if self.n else ()

    def _to_old(self, y: Sequence[int]) -> tuple[int, ...]:
        n = self.n
        T = self.T
        return tuple(sum(y[k] * T[k][l] for k in range(n)) for l in range(n))

    def _center(self, c_old: Optional[Sequence]) -> list[mpq]:
        if c_old is None:
            return [mpq(0)] * self.n
        c = exact.mat_vec(self.T_inv_t, [Fraction(x) for x in c_old])
        return [_to_mpq(x) for x in c]

    def _walk(self, c: list[mpq], bound: mpq, visit, shrink: bool):
        """Depth-first search over y with Q(y + c) ≤ bound.

        ``visit(y, q)`` receives each point; with ``shrink`` it returns a new
        (smaller) bound, which then prunes the rest of the search.
        """
        n = self.n
        mu, B = self.mu, self.B
        y = [0] * n
        w = [mpq(0)] * n  # w_i = y_i + c_i
        state = {"bound": bound}

        def rec(j: int, used: mpq):
            z = -c[j]
            muj = None
            for i in range(j + 1, n):
                m = mu[i][j]
                if m:
                    z -= m * w[i]
            rem = state["bound"] - used
            lo, hi = _interval(z, rem / B[j])
            if lo > hi:
                return
            if shrink:
                order = _zigzag(z, lo, hi)
            else:
                order = range(lo, hi + 1)
            Bj = B[j]
            for v in order:
                d = v - z
                q = used + Bj * d * d
                if q > state["bound"]:
                    if shrink:
                        continue
                    continue
                y[j] = v
                w[j] = v + c[j]
                if j == 0:
                    nb = visit(tuple(y), q)
                    if shrink and nb is not None:
                        state["bound"] = nb
                else:
                    rec(j - 1, q)
            y[j] = 0
            w[j] = c[j]

        if n == 0:
            visit((), mpq(0))
            return
        for i in range(n):
            w[i] = c[i]
        rec(n - 1, mpq(0))

    def babai_bound(self, c: list[mpq]) -> mpq:
        """Norm of the nearest-plane solution, an upper bound for the CVP."""
        n = self.n
        mu, B = self.mu, self.B
        w = [mpq(0)] * n
        total = mpq(0)
        for j in range(n - 1, -1, -1):
            z = -c[j]
            for i in range(j + 1, n):
                z -= mu[i][j] * w[i]
            v = _round(z)
            w[j] = v + c[j]
            total += B[j] * (v - z) ** 2
        return total

    def points(self, bound, center=None) -> list[tuple[tuple[int, ...], Fraction]]:
        """All (x, Q(x + center)) with Q ≤ bound, x in original coordinates."""
        c = self._center(center)
        out = []

        def visit(y, q):
            out.append((self._to_old(y), q))

        self._walk(c, _to_mpq(bound), visit, shrink=False)
        return [(x, _to_fraction(q)) for x, q in out]

    def count(self, norm, center=None) -> int:
        c = self._center(center)
        target = _to_mpq(norm)
        hits = [0]

        def visit(y, q):
            if q == target:
                hits[0] += 1

        self._walk(c, target, visit, shrink=False)
        return hits[0]

    def minimum(self, center=None) -> Fraction:
        """min Q(x + center) over integer x."""
        c = self._center(center)
        best = [self.babai_bound(c)]

        def visit(y, q):
            if q < best[0]:
                best[0] = q
                return q
            return None

        self._walk(c, best[0], visit, shrink=True)
        return _to_fraction(best[0])


def _zigzag(z: mpq, lo: int, hi: int):
    """Integers of [lo, hi] ordered by distance to z."""
    start = min(max(_round(z), lo), hi)
    yield start
    a, b = start - 1, start + 1
    while a >= lo or b <= hi:
        da = z - a if a >= lo else None
        db = b - z if b <= hi else None
        if db is None or (da is not None and da <= db):
            yield a
            a -= 1
        else:
            yield b
            b += 1


@lru_cache(maxsize=256)
def _enumerator(gram: tuple) -> Enumerator:
    return Enumerator(gram)


def enumerator_for(M: Lattice | Sublattice) -> Enumerator:
    if isinstance(M, Lattice):
        return _enumerator(M.gram)
    return _enumerator(M.gram)


def _coset_coords(M: Lattice | Sublattice, h) -> Optional[tuple]:
    if h is None:
        return None
    if isinstance(M, Lattice):
        return tuple(Fraction(x) for x in h)
    c = M.coordinates(h)
    if c is None:
        raise ValueError("h is not in the rational span of the lattice")
    return c


def vectors_up_to_norm(L: Lattice | Sublattice, bound) -> list[tuple]:
    """All nonzero v with ⟨v,v⟩ ≤ bound, in coordinates of L's basis.

    For a sublattice the vectors are returned in ambient coordinates.
    """
    pts = enumerator_for(L).points(bound)
    pts = [x for x, q in pts if q > 0]
    pts.sort()
    if isinstance(L, Sublattice):
        return [L.vector(x) for x in pts]
    return pts


def min_coset_norm(M: Lattice | Sublattice, h) -> Fraction:
    """min ⟨α,α⟩ over α ∈ M + h (not halved)."""
    if M.rank == 0:
        return Fraction(0)
    return enumerator_for(M).minimum(_coset_coords(M, h))


def count_coset_vectors_of_norm(M: Lattice | Sublattice, h, norm) -> int:
    if M.rank == 0:
        return int(Fraction(norm) == 0)
    return enumerator_for(M).count(norm, _coset_coords(M, h))


def coset_vectors_up_to_norm(M: Lattice | Sublattice, h, bound) -> list[tuple[tuple, Fraction]]:
    """(α, ⟨α,α⟩) for α ∈ M + h with norm ≤ bound; α in ambient coordinates."""
    c = _coset_coords(M, h)
    pts = enumerator_for(M).points(bound, c)
    out = []
    for x, q in pts:
        coords = tuple(Fraction(a) + b for a, b in zip(x, c)) if c is not None else x
        vec = M.vector(coords) if isinstance(M, Sublattice) else coords
        out.append((vec, q))
    out.sort()
    return out
