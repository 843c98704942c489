"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples. Integer matrices hold ``int`` entries,
rational ones hold :class:`fractions.Fraction`. Everything returned is
immutable so values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

Rational = Fraction
IntMatrix = tuple[tuple[int, ...], ...]
RatMatrix = tuple[tuple[Fraction, ...], ...]
Poly = tuple[int, ...]  # coefficients, lowest degree first


def as_matrix(rows: Sequence[Sequence]) -> tuple:
    return tuple(tuple(r) for r in rows)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> IntMatrix:
    return tuple((0,) * c for _ in range(r))


def transpose(m: Sequence[Sequence]) -> tuple:
    if not m:
        return ()
    return tuple(zip(*m))


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_mat(v: Sequence, a: Sequence[Sequence]) -> tuple:
    return mat_vec(transpose(a), v)


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def mat_add(a, b) -> tuple:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_sub(a, b) -> tuple:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_scale(c, a) -> tuple:
    return tuple(tuple(c * x for x in r) for r in a)


def mat_pow(a: Sequence[Sequence], k: int) -> tuple:
    n = len(a)
    result = identity(n)
    base = as_matrix(a)
    while k > 0:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def quadratic_form(g: Sequence[Sequence], u: Sequence, v: Sequence):
    """uᵀ·G·v."""
    return dot(u, mat_vec(g, v))


def det(m: Sequence[Sequence]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def rational_det(m: Sequence[Sequence]) -> Fraction:
    den = 1
    for row in m:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    scaled = [[int(Fraction(x) * den) for x in row] for row in m]
    return Fraction(det(scaled), den ** len(m))


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    rows = [[Fraction(x) for x in r] for r in m]
    return len(_rref(rows, len(rows[0]))[1])


def inverse(m: Sequence[Sequence]) -> RatMatrix:
    """Inverse over Q; raises ValueError when singular."""
    n = len(m)
    rows = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
            for i, r in enumerate(m)]
    rows, pivots = _rref(rows, n)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(r[n:]) for r in rows)


def solve_rational(a: Sequence[Sequence], b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Some rational x with A·x = b, or None when the system is inconsistent."""
    if not a:
        return ()
    ncols = len(a[0])
    rows = [[Fraction(x) for x in r] + [Fraction(y)] for r, y in zip(a, b)]
    rows, pivots = _rref(rows, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][ncols]
    return tuple(x)


def rational_kernel(a: Sequence[Sequence], ncols: Optional[int] = None) -> RatMatrix:
    """Basis (as rows) of the right kernel of A over Q."""
    if ncols is None:
        ncols = len(a[0])
    rows = [[Fraction(x) for x in r] for r in a]
    rows, pivots = _rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(tuple(v))
    return tuple(basis)


# ---------------------------------------------------------------------------
# Smith and Hermite normal forms


@dataclass(frozen=True)
class SmithDecomposition:
    """U·M·V = S with S diagonal, d₁ | d₂ | …, U and V unimodular."""

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.S[i][i] for i in range(min(len(self.S), len(self.S[0]) if self.S else 0)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithDecomposition:
    nr = len(m)
    nc = len(m[0]) if nr else 0
    a = [list(map(int, r)) for r in m]
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    # V is kept transposed so column operations become row operations
    vt = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        vt[i], vt[j] = vt[j], vt[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        if q:
            a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
            u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        if q:
            for row in a:
                row[dst] -= q * row[src]
            vt[dst] = [x - q * y for x, y in zip(vt[dst], vt[src])]

    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = a[i][j]
                if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, a[i][t] // p)
                    if a[i][t]:
                        done = False
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, a[t][j] // p)
                    if a[t][j]:
                        done = False
            if not done:
                best = None
                for i in range(t, nr):
                    if a[i][t] and (best is None or abs(a[i][t]) < abs(a[best][t])):
                        best = i
                swap_rows(t, best)
                bestc = None
                for j in range(t, nc):
                    if a[t][j] and (bestc is None or abs(a[t][j]) < abs(a[t][bestc])):
                        bestc = j
                swap_cols(t, bestc)
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return SmithDecomposition(as_matrix(a), as_matrix(u), transpose(vt) if nc else ())


def elementary_divisors(m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return smith_normal_form(m).diagonal


def hermite_normal_form(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style HNF: nonzero rows span the same Z-module as the rows of M.

    Pivots are positive, entries above a pivot are reduced into [0, pivot),
    and zero rows are dropped.
    """
    a = [list(map(int, r)) for r in m]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    r = 0
    for c in range(nc):
        if r == nr:
            break
        while True:
            nz = [i for i in range(r, nr) if a[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[piv] = a[piv], a[r]
            clean = True
            for i in range(r + 1, nr):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if r < nr and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            p = a[r][c]
            for i in range(r):
                q = a[i][c] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
    return as_matrix(a[:r])


def solve_integer(a: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Some integer x with A·x = b, or None if no integral solution exists."""
    if not a:
        return ()
    nc = len(a[0])
    snf = smith_normal_form(a)
    ub = mat_vec(snf.U, b)
    y = [0] * nc
    for i, c in enumerate(ub):
        d = snf.S[i][i] if i < min(len(a), nc) else 0
        if d == 0:
            if c != 0:
                return None
        else:
            if c % d:
                return None
            y[i] = c // d
    return mat_vec(snf.V, y)


def integer_kernel(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    """Rows form a basis of {x ∈ Zⁿ : A·x = 0}; the basis is saturated."""
    if ncols is None:
        ncols = len(a[0])
    if not a:
        return identity(ncols)
    snf = smith_normal_form(a)
    r = snf.rank
    vt = transpose(snf.V)
    return hermite_normal_form(vt[r:]) if r < ncols else ()


def solve_mod2(a: Sequence[Sequence[int]], b: Sequence[int], ncols: Optional[int] = None) -> Optional[tuple[int, ...]]:
    """Some x ∈ {0,1}ⁿ with A·x ≡ b (mod 2), or None."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    rows = [[x % 2 for x in r] + [c % 2] for r, c in zip(a, b)]
    pivots = []
    r = 0
    for col in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    x = [0] * ncols
    for i, col in enumerate(pivots):
        x[col] = rows[i][-1]
    return tuple(x)


def common_denominator(values) -> int:
    d = 1
    for x in values:
        d = lcm(d, Fraction(x).denominator)
    return d


def lattice_basis(generators: Sequence[Sequence]) -> RatMatrix:
    """Basis (rows) of the Z-span of rational generator rows."""
    gens = [tuple(Fraction(x) for x in g) for g in generators]
    if not gens:
        return ()
    d = common_denominator(x for g in gens for x in g)
    h = hermite_normal_form([[int(x * d) for x in g] for g in gens])
    return tuple(tuple(Fraction(x, d) for x in row) for row in h)


def rational_solve_in_span(basis: Sequence[Sequence], v: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Coordinates c with Σ c_i·basis_i = v, or None if v is outside the span."""
    if not basis:
        return () if all(x == 0 for x in v) else None
    return solve_rational(transpose(basis), v)


def in_integer_span(basis: Sequence[Sequence], v: Sequence) -> bool:
    """True iff the rational vector v is an integral combination of the rows."""
    c = rational_solve_in_span(basis, v)
    return c is not None and all(x.denominator == 1 for x in c)


# ---------------------------------------------------------------------------
# Polynomials


def char_poly(m: Sequence[Sequence[int]]) -> Poly:
    """Monic characteristic polynomial det(x·I − M) by the Berkowitz algorithm."""
    n = len(m)
    if n == 0:
        return (1,)
    a = [list(map(int, r)) for r in m]
    # vect holds coefficients highest degree first
    vect = [1, -a[0][0]]
    for k in range(1, n):
        r = a[k][:k]          # row k, first k columns
        s = [a[i][k] for i in range(k)]  # column k, first k rows
        akk = a[k][k]
        sub = [row[:k] for row in a[:k]]
        # Toeplitz column: 1, -akk, -r·s, -r·A·s, ...
        col = [1, -akk]
        cur = s
        for _ in range(k):
            col.append(-sum(x * y for x, y in zip(r, cur)))
            cur = [sum(x * y for x, y in zip(row, cur)) for row in sub]
        new = []
        for i in range(k + 2):
            new.append(sum(col[i - j] * vect[j] for j in range(len(vect)) if 0 <= i - j < len(col)))
        vect = new
    return tuple(reversed(vect))


def poly_trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_pow(p: Sequence[int], k: int) -> Poly:
    out: Poly = (1,)
    for _ in range(k):
        out = poly_mul(out, p)
    return out


def poly_divmod(p: Sequence[int], q: Sequence[int]) -> tuple[Poly, Poly]:
    """Division by a monic integer polynomial q."""
    q = poly_trim(q)
    if q[-1] != 1:
        raise ValueError("divisor must be monic")
    p = list(poly_trim(p))
    dq = len(q) - 1
    if len(p) - 1 < dq:
        return (0,), tuple(p)
    quot = [0] * (len(p) - dq)
    for i in range(len(p) - 1, dq - 1, -1):
        c = p[i]
        if c:
            quot[i - dq] = c
            for j in range(dq + 1):
                p[i - dq + j] -= c * q[j]
    return poly_trim(quot), poly_trim(p[:dq] or [0])


def x_power_minus_one(t: int) -> Poly:
    return (-1,) + (0,) * (t - 1) + (1,)


def cyclotomic(n: int) -> Poly:
    p = x_power_minus_one(n)
    for d in divisors(n):
        if d < n:
            p, r = poly_divmod(p, cyclotomic(d))
            assert r == (0,)
    return p


def poly_eval_matrix(p: Sequence[int], m: Sequence[Sequence[int]]) -> IntMatrix:
    n = len(m)
    acc = zeros(n, n)
    for c in reversed(p):
        acc = mat_add(mat_mul(acc, m), mat_scale(c, identity(n)))
    return acc


# ---------------------------------------------------------------------------
# Elementary number theory


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def frac_mod1(x: Fraction) -> Fraction:
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def is_integral(x) -> bool:
    return Fraction(x).denominator == 1


def gcd_list(xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
