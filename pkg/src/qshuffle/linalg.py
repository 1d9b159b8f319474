"""Exact linear algebra over the Laurent fraction field.

Rank and determinants go through fraction-free (Bareiss) elimination after
clearing row denominators; solving and inversion run Gauss-Jordan with exact
fraction arithmetic.  Zero tests are exact, never numeric.
"""

from __future__ import annotations

from .scalars import ScalarFraction, exact_div


def _as_fraction(x):
    if isinstance(x, ScalarFraction):
        return x
    return ScalarFraction(x)


def _clear_rows(matrix):
    """Scale each row by the product of its denominators -> LaurentPoly rows.

    Scaling rows by nonzero scalars preserves rank and zero/nonzero of det.
    """
    cleared = []
    for row in matrix:
        frow = [_as_fraction(x) for x in row]
        ring = frow[0].ring
        den = ring.one()
        for x in frow:
            den = den * x.den
        cleared.append([x.num * exact_div(den, x.den) for x in frow])
    return cleared


def rank(matrix):
    """Rank over the fraction field by fraction-free elimination."""
    if not matrix or not matrix[0]:
        return 0
    m = _clear_rows(matrix)
    nrows, ncols = len(m), len(m[0])
    ring = m[0][0].ring
    prev = ring.one()
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        pivot = None
        for i in range(r, nrows):
            if not m[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        piv = m[r][col]
        for i in range(r + 1, nrows):
            if m[i][col].is_zero() and prev.is_one():
                continue
            for j in range(col + 1, ncols):
                num = piv * m[i][j] - m[i][col] * m[r][j]
                q = exact_div(num, prev)
                assert q is not None, "Bareiss division must be exact"
                m[i][j] = q
            m[i][col] = ring.zero()
        prev = piv
        r += 1
    return r


def det(matrix):
    """Determinant of a square matrix of scalars, as a ScalarFraction."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    m = [[_as_fraction(x) for x in row] for row in matrix]
    ring = m[0][0].ring
    out = ScalarFraction(ring.one())
    sign = 1
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if not m[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            return ScalarFraction(ring.zero())
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        piv = m[col][col]
        out = out * piv
        inv = piv.inv()
        for i in range(col + 1, n):
            if m[i][col].is_zero():
                continue
            factor = m[i][col] * inv
            for j in range(col, n):
                m[i][j] = m[i][j] - factor * m[col][j]
    if sign < 0:
        out = -out
    return out


def solve(matrix, rhs):
    """Solve A x = b over the fraction field (A rectangular, b a list of
    columns or a single column).

    Returns (solutions, unique) where solutions matches the shape of rhs,
    or None when the system is inconsistent.  With a non-trivial nullspace
    the particular solution sets the free variables to zero and unique is
    False.
    """
    single = rhs and not isinstance(rhs[0], list)
    cols = [list(rhs)] if single else [list(c) for c in rhs]
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    aug = [[_as_fraction(x) for x in row] + [_as_fraction(c[i]) for c in cols]
           for i, row in enumerate(matrix)]
    ring = aug[0][0].ring if aug else None
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        pivot = None
        for i in range(r, nrows):
            if not aug[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][col].inv()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and not aug[i][col].is_zero():
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, nrows):
        for k in range(len(cols)):
            if not aug[i][ncols + k].is_zero():
                return None
    zero = ScalarFraction(ring.zero()) if ring is not None else None
    solutions = []
    for k in range(len(cols)):
        x = [zero] * ncols
        for row_idx, col in enumerate(pivots):
            x[col] = aug[row_idx][ncols + k]
        solutions.append(x)
    unique = len(pivots) == ncols
    return (solutions[0] if single else solutions), unique


def invert(matrix):
    """Inverse of a square matrix over the fraction field, or None if singular."""
    n = len(matrix)
    ring = _as_fraction(matrix[0][0]).ring
    one = ScalarFraction(ring.one())
    zero = ScalarFraction(ring.zero())
    identity = [[one if i == j else zero for j in range(n)] for i in range(n)]
    result = solve(matrix, [[identity[i][j] for i in range(n)] for j in range(n)])
    if result is None:
        return None
    cols, unique = result
    if not unique:
        return None
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = None
            for k in range(inner):
                term = _as_fraction(a[i][k]) * _as_fraction(b[k][j])
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(row)
    return out


def mat_sub(a, b):
    return [[_as_fraction(x) - _as_fraction(y) for x, y in zip(ra, rb)]
            for ra, rb in zip(a, b)]


def mat_eq(a, b):
    if len(a) != len(b) or (a and len(a[0]) != len(b[0])):
        return False
    return all(_as_fraction(x) == _as_fraction(y)
               for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_matrix(a):
    return all(_as_fraction(x).is_zero() for row in a for x in row)


def zero_matrix(ring, rows, cols):
    z = ScalarFraction(ring.zero())
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity_matrix(ring, n):
    one = ScalarFraction(ring.one())
    z = ScalarFraction(ring.zero())
    return [[one if i == j else z for j in range(n)] for i in range(n)]
