"""Exact linear algebra over Z and Q.

Matrices are lists (or tuples) of rows.  Integer routines work on Python
ints, rational routines on :class:`fractions.Fraction`; nothing here ever
touches floating point.
"""

from fractions import Fraction
from math import gcd


def identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def columns(m):
    return [tuple(col) for col in zip(*m)]


def primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def integral_multiple(v):
    """Smallest positive multiple of a rational vector that is integral and primitive."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in v])


# --------------------------------------------------------------------------
# rational elimination


def rref(rows):
    """Reduced row echelon form over Q.  Returns (matrix, pivot columns)."""
    r = [[Fraction(x) for x in row] for row in rows]
    if not r:
        return [], []
    ncols = len(r[0])
    pivots = []
    lead = 0
    for c in range(ncols):
        pivot = None
        for i in range(lead, len(r)):
            if r[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        r[lead], r[pivot] = r[pivot], r[lead]
        p = r[lead][c]
        r[lead] = [x / p for x in r[lead]]
        for i in range(len(r)):
            if i != lead and r[i][c] != 0:
                f = r[i][c]
                r[i] = [x - f * y for x, y in zip(r[i], r[lead])]
        pivots.append(c)
        lead += 1
        if lead == len(r):
            break
    return r, pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, ncols=None):
    """A basis (over Q) of {x : rows * x = 0}."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    r, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One rational solution x of rows * x = rhs, or None if inconsistent.

    Free variables are set to zero, so the solution is supported on the
    pivot columns.
    """
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    r, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = r[i][ncols]
    return x


def det(m):
    """Exact determinant of a square matrix (Bareiss for ints, Gauss otherwise)."""
    k = len(m)
    if k == 0:
        return 1
    if all(isinstance(x, int) for row in m for x in row):
        a = [list(row) for row in m]
        sign = 1
        prev = 1
        for i in range(k - 1):
            if a[i][i] == 0:
                swap = next((r for r in range(i + 1, k) if a[r][i] != 0), None)
                if swap is None:
                    return 0
                a[i], a[swap] = a[swap], a[i]
                sign = -sign
            for r in range(i + 1, k):
                for c in range(i + 1, k):
                    a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
            prev = a[i][i]
        return sign * a[k - 1][k - 1]
    a = [[Fraction(x) for x in row] for row in m]
    result = Fraction(1)
    for i in range(k):
        pivot = next((r for r in range(i, k) if a[r][i] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != i:
            a[i], a[pivot] = a[pivot], a[i]
            result = -result
        result *= a[i][i]
        for r in range(i + 1, k):
            f = a[r][i] / a[i][i]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return result


def inverse(m):
    k = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(k)]
           for i, row in enumerate(m)]
    r, pivots = rref(aug)
    if pivots[:k] != list(range(k)):
        raise ZeroDivisionError("singular matrix")
    return [row[k:] for row in r]


# --------------------------------------------------------------------------
# integer normal forms


def smith_normal_form(m):
    """Smith normal form with transforms: ``U * m * V == S``.

    ``U`` and ``V`` are unimodular, ``S`` is diagonal with nonnegative
    entries s_1 | s_2 | ...  The pivot at each stage is the entry of
    smallest absolute value in the remaining block, ties broken by the
    first row-major index, so the transforms are deterministic.
    """
    d = len(m)
    n = len(m[0]) if d else 0
    s = [list(row) for row in m]
    u = identity(d)
    v = identity(n)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row dst += q * row src
        s[dst] = [a + q * b for a, b in zip(s[dst], s[src])]
        u[dst] = [a + q * b for a, b in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in s:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(d, n)):
        while True:
            best = None
            for i in range(t, d):
                for j in range(t, n):
                    if s[i][j] != 0 and (best is None or abs(s[i][j]) < abs(s[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = s[t][t]
            for i in range(t + 1, d):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // p))
            for j in range(t + 1, n):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // p))
            if any(s[i][t] for i in range(t + 1, d)) or any(s[t][j] for j in range(t + 1, n)):
                continue
            bad = next(((i, j) for i in range(t + 1, d) for j in range(t + 1, n)
                        if s[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if t < d and t < n and s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return u, s, v


def snf_diagonal(m):
    _, s, _ = smith_normal_form(m)
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))]


def hermite_rows(vectors):
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Returns the nonzero rows: echelon, positive pivots, entries above each
    pivot reduced into [0, pivot).  Equal lattices give equal output.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    out = []
    for c in range(ncols):
        active = [r for r in rows if r[c] != 0]
        rest = [r for r in rows if r[c] == 0]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[c]))
            p = active[0]
            new = [p]
            for r in active[1:]:
                q = r[c] // p[c]
                r = [a - q * b for a, b in zip(r, p)]
                if r[c] != 0:
                    new.append(r)
                elif any(r):
                    rest.append(r)
            active = new
        if active:
            p = active[0]
            if p[c] < 0:
                p = [-x for x in p]
            out.append((c, p))
        rows = rest
    result = []
    for idx, (c, p) in enumerate(out):
        result.append(p)
    # reduce entries above pivots
    for i in range(len(result)):
        c = out[i][0]
        for k in range(i):
            q = result[k][c] // result[i][c]
            if q:
                result[k] = [a - q * b for a, b in zip(result[k], result[i])]
    return [tuple(r) for r in result]


def kernel_basis(m):
    """Z-basis of the integer kernel of ``m``, in Hermite normal form.

    Read off the columns of the right SNF transform that hit zero
    diagonal entries; the basis is then HNF-reduced so that it does not
    depend on the pivoting.
    """
    d = len(m)
    n = len(m[0])
    _, s, v = smith_normal_form(m)
    r = sum(1 for i in range(min(d, n)) if s[i][i] != 0)
    basis = [tuple(v[i][j] for i in range(n)) for j in range(r, n)]
    basis = hermite_rows(basis)
    for b in basis:
        assert all(x == 0 for x in matvec(m, b))
    assert len(basis) == n - rank(m)
    return basis


def lattice_coordinates(basis, vectors):
    """Rational coordinates of ``vectors`` with respect to the rows of ``basis``."""
    bt = transpose([[Fraction(x) for x in b] for b in basis])
    coords = []
    for v in vectors:
        x = solve(bt, [Fraction(y) for y in v])
        if x is None:
            return None
        coords.append(x)
    return coords
