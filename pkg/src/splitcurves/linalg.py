"""Small dense exact linear algebra over the rationals.

Rank is computed fraction-free (Bareiss) on integer-cleared rows; kernels
come from the (unique) reduced row echelon form, normalized to primitive
integer vectors, so every result is deterministic.
"""

import math

from .scalars import QQ, ZERO, ONE, clear_denominators


def _int_rows(rows):
    return [clear_denominators([QQ(x) for x in row]) for row in rows]


def rank_bareiss(rows):
    """Rank by fraction-free (Bareiss) elimination on integer-cleared rows.

    Pivot selection: in column order, the candidate entry of largest height
    (absolute value), ties broken by the lowest row index.
    """
    if not rows:
        return 0
    m = _int_rows(rows)
    nrows, ncols = len(m), len(m[0])
    prev = 1
    rank = 0
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        best = None
        for i in range(row, nrows):
            if m[i][col]:
                if best is None or abs(m[i][col]) > abs(m[best][col]):
                    best = i
        if best is None:
            continue
        m[row], m[best] = m[best], m[row]
        piv = m[row][col]
        for i in range(row + 1, nrows):
            if any(m[i][col:]):
                coef = m[i][col]
                for j in range(col, ncols):
                    m[i][j] = (m[i][j] * piv - coef * m[row][j]) // prev
        prev = piv
        rank += 1
        row += 1
    return rank


def det_bareiss(m_int):
    """Determinant of a square integer matrix by Bareiss elimination."""
    m = [list(r) for r in m_int]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank_naive(rows):
    """Rank by plain rational Gaussian elimination (oracle for Bareiss)."""
    if not rows:
        return 0
    m = [[QQ(x) for x in row] for row in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        sel = None
        for i in range(row, nrows):
            if m[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = ONE / m[row][col]
        m[row] = [a * inv for a in m[row]]
        for i in range(row + 1, nrows):
            if m[i][col] != 0:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[row])]
        rank += 1
        row += 1
    return rank


def rref(rows, ncols=None):
    """Reduced row echelon form over QQ; returns (matrix, pivot columns)."""
    m = [[QQ(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= len(m):
            break
        sel = None
        for i in range(row, len(m)):
            if m[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = ONE / m[row][col]
        m[row] = [a * inv for a in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col] != 0:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
    return m, pivots


def primitive_vector(vec):
    """Scale a rational vector to coprime integers, first nonzero positive."""
    ints = clear_denominators([QQ(x) for x in vec])
    for v in ints:
        if v:
            if v < 0:
                ints = [-x for x in ints]
            break
    return [QQ(v) for v in ints]


def kernel_basis(rows, ncols):
    """Rational kernel of the row system, as primitive integer vectors.

    Derived from the unique RREF, so the basis (and its order, by free
    column) is deterministic.
    """
    if not rows:
        return [
            primitive_vector([ONE if i == j else ZERO for i in range(ncols)])
            for j in range(ncols)
        ]
    m, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][f]
        basis.append(primitive_vector(v))
    return basis


def solve_linear(rows, rhs):
    """One rational solution of rows*x = rhs, or None if inconsistent."""
    if not rows:
        return []
    ncols = len(rows[0])
    aug = [list(map(QQ, row)) + [QQ(b)] for row, b in zip(rows, rhs)]
    m, pivots = rref(aug, ncols)
    for r in range(len(m)):
        if all(m[r][c] == 0 for c in range(ncols)) and m[r][ncols] != 0:
            return None
    x = [ZERO] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return x


def mat_mul(a, b):
    return [
        [sum((x * y for x, y in zip(row, col)), ZERO) for col in zip(*b)]
        for row in a
    ]


def mat_vec(a, v):
    return [sum((x * y for x, y in zip(row, v)), ZERO) for row in a]


def mat_inv(a):
    """Exact inverse of a square rational matrix (None if singular)."""
    n = len(a)
    aug = [
        [QQ(x) for x in row] + [ONE if i == j else ZERO for j in range(n)]
        for i, row in enumerate(a)
    ]
    m, pivots = rref(aug, n)
    if len(pivots) != n:
        return None
    return [row[n:] for row in m]


def mat_det(a):
    """Exact determinant: scale to integers, Bareiss, undo the scaling."""
    n = len(a)
    flat = [QQ(x) for row in a for x in row]
    lcm = 1
    for v in flat:
        lcm = lcm * int(v.denominator) // math.gcd(lcm, int(v.denominator))
    m_int = [
        [int(v.numerator) * (lcm // int(v.denominator)) for v in row2]
        for row2 in [[QQ(x) for x in row] for row in a]
    ]
    d = det_bareiss(m_int)
    return QQ(d) / QQ(lcm) ** n
