"""Exact linear algebra over Q and Z.

Every verdict in this package (Lefschetz maximal rank, ideal piece dimensions,
Laplace equation counts, facet supports, splitting types) is a statement about
the rank or kernel of an integer or rational matrix, and all of them must be
exact.  Two independent elimination routines are provided:

* ``bareiss_rank``: fraction-free one-step Bareiss elimination on integer
  matrices.  Integer pivots, exact divisions, no rationals.  Authoritative.
* ``rational_rank``: naive Gaussian elimination with ``Fraction`` pivots.
  Used as the cross-check route; property tests assert both agree.

``exact_rank`` wraps Bareiss with a certified shortcut: the rank of the matrix
reduced mod a fixed prime is a lower bound for the rational rank, so whenever
the mod-p rank reaches min(rows, cols) the exact rank is known without any
big-integer work.  A deficient mod-p outcome is never trusted; it falls back
to Bareiss.  The shortcut changes nothing about the returned value.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

# Mersenne prime 2**31 - 1: the product of two reduced residues fits in int64
# with room for the subtraction in a row operation.
_PRIME = 2_147_483_647


def clear_denominators(row):
    """Scale a row of Fractions/ints to integers (row scaling preserves rank)."""
    fracs = [Fraction(x) for x in row]
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    return [int(f * lcm) for f in fracs]


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free Bareiss elimination."""
    mat = [[int(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot_row = None
        for i in range(rank, nrows):
            if mat[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pivot = mat[rank][col]
        for i in range(rank + 1, nrows):
            head = mat[i][col]
            row_i = mat[i]
            row_p = mat[rank]
            # one-step Bareiss: the division by the previous pivot is exact,
            # and it must run even when head == 0 to keep entries minor-sized
            for j in range(col + 1, ncols):
                row_i[j] = (pivot * row_i[j] - head * row_p[j]) // prev
            row_i[col] = 0
        prev = pivot
        rank += 1
    return rank


def rational_rank(rows) -> int:
    """Rank by plain Gaussian elimination over Fraction.  Cross-check route."""
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot_row = None
        for i in range(rank, nrows):
            if mat[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(nrows):
            if i != rank and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _modp_rank(mat: np.ndarray, p: int = _PRIME) -> int:
    """Rank of an int64 matrix already reduced mod p.  Destroys its input."""
    nrows, ncols = mat.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(mat[rank:, col])[0]
        if nz.size == 0:
            continue
        pr = rank + int(nz[0])
        if pr != rank:
            mat[[rank, pr]] = mat[[pr, rank]]
        inv = pow(int(mat[rank, col]), p - 2, p)
        mat[rank, col:] = (mat[rank, col:] * inv) % p
        heads = mat[rank + 1 :, col]
        live = np.nonzero(heads)[0]
        if live.size:
            block = mat[rank + 1 + live, col:]
            block = (block - heads[live, None] * mat[rank, col:]) % p
            mat[rank + 1 + live, col:] = block
        rank += 1
    return rank


def _to_modp_array(rows, p: int = _PRIME) -> np.ndarray:
    # entries may exceed int64, reduce in Python first
    return np.array([[x % p for x in row] for row in rows], dtype=np.int64)


def exact_rank(rows) -> int:
    """Exact rank of an integer matrix.

    Mod-p rank is a lower bound for the rank over Q; if it reaches
    min(rows, cols) that value is certified exact.  Otherwise Bareiss decides.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if nrows == 0 or ncols == 0:
        return 0
    ceiling = min(nrows, ncols)
    modp = _modp_rank(_to_modp_array(rows))
    if modp == ceiling:
        return modp
    return bareiss_rank(rows)


def rank_of_rows(rows) -> int:
    """Exact rank of a matrix with Fraction/int entries."""
    if not rows:
        return 0
    return exact_rank([clear_denominators(row) for row in rows])


def rank_of_int_product(left, right) -> int:
    """Exact rank of the product left @ right (integer matrices).

    The product is only materialized over Z when the mod-p screen fails to
    certify full rank; for the common full-rank case a single int64 matmul
    mod a smaller prime decides.
    """
    n = len(left)
    if n == 0:
        return 0
    inner = len(left[0])
    m = len(right[0]) if right else 0
    if inner == 0 or m == 0:
        return 0
    # p**2 * inner must stay below 2**63
    p = 1_000_003
    if inner * p * p < 2**62:
        lm = _to_modp_array(left, p)
        rm = _to_modp_array(right, p)
        prod = (lm @ rm) % p
        modp = _modp_rank(prod, p)
        if modp == min(n, m):
            return modp
    full = [
        [sum(a * b for a, b in zip(lrow, rcol)) for rcol in zip(*right)]
        for lrow in left
    ]
    return exact_rank(full)


def kernel_basis(rows, ncols):
    """Basis of the right kernel over Q, one vector per free column.

    Rows may be Fractions or ints.  Returns a list of length-ncols Fraction
    vectors; the basis is the reduced-echelon one (free column set to 1).
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    pivots = []
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot_row = None
        for i in range(rank, nrows):
            if mat[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(nrows):
            if i != rank and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, col in enumerate(pivots):
            vec[col] = -mat[i][free]
        basis.append(vec)
    return basis


def solve_exact(columns, target):
    """Solve sum_j y_j * columns[j] = target over Q, or return None.

    Used for lattice coordinates on facets; callers assert integrality.
    """
    ncols = len(columns)
    nrows = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
           for i in range(nrows)]
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, nrows):
            if aug[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        aug[rank], aug[pivot_row] = aug[pivot_row], aug[rank]
        inv = 1 / aug[rank][col]
        aug[rank] = [x * inv for x in aug[rank]]
        for i in range(nrows):
            if i != rank and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, nrows):
        if aug[i][ncols]:
            return None
    solution = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        solution[col] = aug[i][ncols]
    return solution


def det_int(rows) -> int:
    """Determinant of a square integer matrix (Bareiss, exact)."""
    mat = [[int(x) for x in row] for row in rows]
    n = len(mat)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if mat[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            return 0
        if pivot_row != col:
            mat[col], mat[pivot_row] = mat[pivot_row], mat[col]
            sign = -sign
        pivot = mat[col][col]
        for i in range(col + 1, n):
            head = mat[i][col]
            for j in range(col + 1, n):
                mat[i][j] = (pivot * mat[i][j] - head * mat[col][j]) // prev
            mat[i][col] = 0
        prev = pivot
    return sign * mat[n - 1][n - 1]


def primitive_vector(vec):
    """Divide an integer vector by the gcd of its entries (zero vector fixed)."""
    g = 0
    for x in vec:
        g = math.gcd(g, abs(int(x)))
    if g == 0:
        return tuple(int(x) for x in vec)
    return tuple(int(x) // g for x in vec)


def integer_kernel_of_vector(vec):
    """Basis of {x in Z^m : vec . x = 0} for a primitive integer vector.

    Columns of a unimodular matrix U with vec . U = (g, 0, ..., 0); the last
    m-1 columns span the kernel lattice exactly.
    """
    m = len(vec)
    w = [int(x) for x in vec]
    cols = [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    for j in range(1, m):
        while w[j]:
            q = w[0] // w[j]
            w[0] -= q * w[j]
            cols[0] = [a - q * b for a, b in zip(cols[0], cols[j])]
            w[0], w[j] = w[j], w[0]
            cols[0], cols[j] = cols[j], cols[0]
    if w[0] == 0:
        raise ValueError("zero vector has no primitive kernel split")
    return [tuple(c) for c in cols[1:]]
