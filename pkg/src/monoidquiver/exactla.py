"""Dense exact linear algebra over the rationals.

Matrices are lists of rows; entries may be ``int`` or ``Fraction``. The
pivot rule is fixed (first nonzero entry, scanning columns left to right
and rows top to bottom), so every basis returned here is reproducible.
"""

from __future__ import annotations

from fractions import Fraction


def _as_rows(M):
    return [[Fraction(x) for x in row] for row in M]


def rref(M):
    """Reduced row echelon form and the pivot columns."""
    A = _as_rows(M)
    if not A:
        return [], []
    rows, cols = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        pivot_row = [x * inv for x in A[r]]
        A[r] = pivot_row
        nz = [j for j in range(c, cols) if pivot_row[j] != 0]
        for i in range(rows):
            if i != r:
                f = A[i][c]
                if f != 0:
                    row = A[i]
                    for j in nz:
                        row[j] -= f * pivot_row[j]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M):
    return len(rref(M)[1])


def kernel_basis(M, cols=None):
    """Basis of {x : M x = 0}; its size is cols - rank(M)."""
    if not M:
        cols = cols or 0
        return [[Fraction(int(i == j)) for j in range(cols)] for i in range(cols)]
    R, pivots = rref(M)
    cols = len(M[0])
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def row_space_basis(vectors):
    """Canonical basis (the nonzero RREF rows) of the span."""
    vectors = [v for v in vectors]
    if not vectors:
        return []
    return rref(vectors)[0]


def same_span(U, V):
    return row_space_basis(U) == row_space_basis(V)


def contains_span(U, V):
    """True when span V ⊆ span U."""
    return rank(list(U) + list(V)) == rank(list(U)) if V else True


def span_product(U, V, mult):
    """Basis of span{u·v : u in U, v in V} for a bilinear product ``mult``."""
    products = [mult(u, v) for u in U for v in V]
    return row_space_basis(products)
