"""Exact integer/rational matrix kernels.

Matrices are carried as an integer numerator array plus one positive common
denominator.  Products go through float64 BLAS only when every partial sum is
provably an integer below 2**53, so the result is exact; otherwise int64 or
arbitrary-precision ``object`` arithmetic is used.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

import numpy as np

_FLOAT_EXACT = 2**52
_INT64_SAFE = 2**62


def _absmax(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(v)) for v in a.flat)
    return int(np.abs(a).max())


def as_int_array(a) -> np.ndarray:
    """Return ``a`` as int64 if every entry fits, else as an object array of ints."""
    a = np.asarray(a)
    if a.dtype != object:
        return a.astype(np.int64, copy=False)
    if _absmax(a) < _INT64_SAFE:
        return a.astype(np.int64)
    return a


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact integer matrix product."""
    inner = a.shape[-1]
    bound = _absmax(a) * _absmax(b) * max(inner, 1)
    if a.dtype != object and b.dtype != object:
        if bound < _FLOAT_EXACT:
            out = a.astype(np.float64) @ b.astype(np.float64)
            return np.rint(out).astype(np.int64)
        if bound < _INT64_SAFE:
            return a @ b
    out = a.astype(object) @ b.astype(object)
    return as_int_array(out)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype != object and b.dtype != object and _absmax(a) * _absmax(b) < _INT64_SAFE:
        return np.kron(a, b)
    return as_int_array(np.kron(a.astype(object), b.astype(object)))


def content(a: np.ndarray) -> int:
    """gcd of all entries (0 for the zero matrix)."""
    if a.size == 0:
        return 0
    if a.dtype == object:
        return reduce(math.gcd, (int(v) for v in a.flat), 0)
    return int(np.gcd.reduce(np.abs(a).ravel()))


def normalize(num: np.ndarray, den: int) -> tuple[np.ndarray, int]:
    """Bring ``num/den`` to lowest terms with ``den > 0``."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        num, den = -num, -den
    g = math.gcd(content(num), den)
    if g > 1:
        num = num // g
        den //= g
    if not np.any(num):
        den = 1
    return as_int_array(num), den


def scale_to_common(num_a, den_a, num_b, den_b):
    """Rewrite two fractions-of-matrices over their common denominator."""
    l = den_a * den_b // math.gcd(den_a, den_b)
    return _mul_scalar(num_a, l // den_a), _mul_scalar(num_b, l // den_b), l


def _mul_scalar(a: np.ndarray, k: int) -> np.ndarray:
    if k == 1:
        return a
    if a.dtype != object and _absmax(a) * abs(k) < _INT64_SAFE:
        return a * k
    return as_int_array(a.astype(object) * k)


def mul_scalar(a: np.ndarray, k: int) -> np.ndarray:
    return _mul_scalar(a, k)


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype != object and b.dtype != object and _absmax(a) + _absmax(b) < _INT64_SAFE:
        return a + b
    return as_int_array(a.astype(object) + b.astype(object))


# ---------------------------------------------------------------------------
# Exact linear solving


def _row_reduce(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination to echelon form.

    Rows are integer lists of length ``ncols + 1`` (augmented).  The pivot is
    the first nonzero entry found in the column; each updated row is divided
    by the gcd of its entries to keep integers small.
    """
    rows = [r[:] for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r]
        pv = p[col]
        for i in range(len(rows)):
            if i == r:
                continue
            q = rows[i]
            f = q[col]
            if f == 0:
                continue
            new = [pv * x - f * y for x, y in zip(q, p)]
            g = reduce(math.gcd, new, 0)
            if g > 1:
                new = [x // g for x in new]
            rows[i] = new
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve(a_num: np.ndarray, a_den: int, b_num: np.ndarray, b_den: int) -> list[Fraction] | None:
    """Solve ``(a_num/a_den) x = b_num/b_den`` exactly.

    Returns one solution (free variables set to zero) or ``None`` when the
    system is inconsistent.  ``b`` is a vector.
    """
    m, n = a_num.shape
    # a x = b  <=>  (a_num * b_den) x = b_num * a_den
    rows = [
        [int(v) * b_den for v in a_num[i]] + [int(b_num[i]) * a_den] for i in range(m)
    ]
    rows, pivots = _row_reduce(rows, n)
    rank = len(pivots)
    for i in range(rank, len(rows)):
        if rows[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = Fraction(rows[i][n], rows[i][col])
    return x


def solve_blocks(a_num: np.ndarray, a_den: int, b_num: np.ndarray, b_den: int):
    """Solve a sparse square-ish system by splitting it into independent blocks.

    Unknowns and equations are grouped into connected components of the
    nonzero pattern of ``a``; each component is solved separately.  Returns
    ``(x, rank)`` where ``x`` is ``None`` if inconsistent.
    """
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    m, n = a_num.shape
    nz_r, nz_c = np.nonzero(a_num)
    # bipartite graph: equations 0..m-1, unknowns m..m+n-1
    graph = coo_matrix(
        (np.ones(len(nz_r), dtype=np.int8), (nz_r, nz_c + m)), shape=(m + n, m + n)
    )
    ncomp, labels = connected_components(graph, directed=False)
    x = [Fraction(0)] * n
    rank = 0
    eq_labels = labels[:m]
    var_labels = labels[m:]
    for comp in range(ncomp):
        eqs = np.flatnonzero(eq_labels == comp)
        vars_ = np.flatnonzero(var_labels == comp)
        if len(vars_) == 0:
            if any(b_num[i] != 0 for i in eqs):
                return None, rank
            continue
        sub = a_num[np.ix_(eqs, vars_)]
        sol = solve(sub, a_den, b_num[eqs], b_den)
        if sol is None:
            return None, rank
        rank += _rank(sub)
        for k, v in zip(vars_, sol):
            x[k] = v
    return x, rank


def _rank(a: np.ndarray) -> int:
    rows = [[int(v) for v in r] + [0] for r in a]
    _, pivots = _row_reduce(rows, a.shape[1])
    return len(pivots)


def inverse(num: np.ndarray, den: int) -> tuple[np.ndarray, int] | None:
    """Exact inverse of the square matrix ``num/den`` or ``None`` if singular."""
    n = num.shape[0]
    rows = [[int(v) for v in num[i]] + [den * int(i == j) for j in range(n)] for i in range(n)]
    rows, pivots = _row_reduce([r[: n] + r[n:] for r in rows], n)
    if len(pivots) < n:
        return None
    # after full (Gauss-Jordan) reduction row i is pivot_i * e_i | stuff
    fr = [[Fraction(rows[i][n + j], rows[i][i]) for j in range(n)] for i in range(n)]
    return from_fractions(fr)


def from_fractions(rows) -> tuple[np.ndarray, int]:
    """Integer numerator array and common denominator for a nested list of rationals."""
    fr = [[Fraction(v) for v in row] for row in rows]
    den = 1
    for row in fr:
        for v in row:
            den = den * v.denominator // math.gcd(den, v.denominator)
    num = np.array([[int(v * den) for v in row] for row in fr], dtype=object)
    if num.size == 0:
        num = num.reshape(len(fr), 0 if not fr else len(fr[0]))
    return normalize(as_int_array(num), den)
