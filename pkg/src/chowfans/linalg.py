"""Exact rational linear algebra helpers.

Everything here works over ``fractions.Fraction`` (or plain ints, which
Fraction arithmetic absorbs).  Matrices are lists of lists, rows first.
No floating point is used anywhere in the package.
"""

from fractions import Fraction
from math import gcd


def mat_copy(m):
    return [list(row) for row in m]


def row_echelon(m):
    """In-place fraction row echelon form.  Returns the list of pivot columns."""
    if not m:
        return []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        for i in range(r + 1, rows):
            f = m[i][c]
            if f == 0:
                continue
            ratio = Fraction(f, 1) / pv
            mi, mr = m[i], m[r]
            for j in range(c, cols):
                mi[j] -= mr[j] * ratio
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def rank(m):
    return len(row_echelon(mat_copy(m)))


def solve(a, b):
    """One exact solution x of a @ x = b, or None if inconsistent.

    The system may be under- or over-determined; free variables are set to 0.
    """
    if not a:
        return []
    rows, cols = len(a), len(a[0])
    aug = [list(a[i]) + [Fraction(b[i])] for i in range(rows)]
    pivots = row_echelon(aug)
    # consistency: no pivot in the rhs column
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        s = aug[r][cols]
        for j in range(c + 1, cols):
            if aug[r][j] != 0:
                s -= aug[r][j] * x[j]
        x[c] = s / aug[r][c]
    return x


def nullspace(m):
    """Basis of the right kernel, as a list of length-cols vectors."""
    if not m:
        return []
    work = mat_copy(m)
    cols = len(work[0])
    pivots = row_echelon(work)
    work = [row for row in work if any(v != 0 for v in row)]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * cols
        x[fc] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            s = Fraction(0)
            for j in range(c + 1, cols):
                if work[r][j] != 0:
                    s -= work[r][j] * x[j]
            x[c] = s / work[r][c]
        basis.append(x)
    return basis


def invert(m):
    """Exact inverse of a square matrix; raises ValueError if singular."""
    n = len(m)
    aug = [list(m[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        pr = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pr is None:
            raise ValueError("singular matrix")
        aug[c], aug[pr] = aug[pr], aug[c]
        pv = aug[c][c]
        aug[c] = [v / pv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [aug[i][j] - f * aug[c][j] for j in range(2 * n)]
    return [row[n:] for row in aug]


def mat_mul(a, b):
    if not a or not b:
        return []
    rows, inner, cols = len(a), len(b), len(b[0])
    bt = list(zip(*b))
    return [[sum(a[i][k] * bt[j][k] for k in range(inner)) for j in range(cols)]
            for i in range(rows)]


def mat_vec(a, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def is_positive_definite(m):
    """Exact positive-definiteness of a symmetric matrix.

    Gaussian elimination without row exchanges: the matrix is positive
    definite iff every pivot encountered is positive (Sylvester's criterion,
    since a zero or negative pivot witnesses a non-positive leading minor).
    """
    n = len(m)
    if n == 0:
        return True
    w = mat_copy(m)
    for k in range(n):
        if w[k][k] <= 0:
            return False
        pv = w[k][k]
        for i in range(k + 1, n):
            if w[i][k] != 0:
                f = Fraction(w[i][k], 1) / pv
                wi, wk = w[i], w[k]
                for j in range(k, n):
                    wi[j] -= wk[j] * f
    return True


def lattice_index(rows):
    """Index of the integer lattice spanned by ``rows`` inside its saturation.

    Computed as the product of the invariant factors of the integer matrix,
    i.e. the gcd of its maximal minors, via a Smith-style reduction.  Rows
    must be linearly independent integer vectors.
    """
    m = [list(map(int, r)) for r in rows]
    if not m:
        return 1
    nrows, ncols = len(m), len(m[0])
    index = 1
    r = c = 0
    while r < nrows and c < ncols:
        pr = min(
            ((i, j) for i in range(r, nrows) for j in range(c, ncols) if m[i][j] != 0),
            key=lambda ij: abs(m[ij[0]][ij[1]]),
            default=None,
        )
        if pr is None:
            break
        i0, j0 = pr
        m[r], m[i0] = m[i0], m[r]
        for row in m:
            row[c], row[j0] = row[j0], row[c]
        pivot = m[r][c]
        dirty = False
        for i in range(r + 1, nrows):
            if m[i][c] != 0:
                q = m[i][c] // pivot
                m[i] = [m[i][j] - q * m[r][j] for j in range(ncols)]
                if m[i][c] != 0:
                    dirty = True
        for j in range(c + 1, ncols):
            if m[r][j] != 0:
                q = m[r][j] // pivot
                for i in range(r, nrows):
                    m[i][j] -= q * m[i][c]
                if m[r][j] != 0:
                    dirty = True
        if dirty:
            continue
        index *= abs(pivot)
        r += 1
        c += 1
    if r < nrows:
        raise ValueError("rows are linearly dependent")
    return index
