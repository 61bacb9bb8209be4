"""Reference computations that share no code with the package.

Matrices here are plain lists of lists of Fractions.  Everything is done by
explicit loops over basis elements so the results can be trusted as oracles
for the numpy kernels and for the set-level skew brace formulas.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def mat(rows):
    return [[Fraction(v) for v in r] for r in rows]


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    assert all(len(r) == k for r in a)
    return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m)] for i in range(n)]


def kron(a, b):
    ra, ca, rb, cb = len(a), len(a[0]), len(b), len(b[0])
    return [
        [a[i // rb][j // cb] * b[i % rb][j % cb] for j in range(ca * cb)]
        for i in range(ra * rb)
    ]


def eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def flip(n, m, signs=None):
    """``X (x) Y -> Y (x) X``; ``signs(i, j)`` gives the coefficient."""
    out = [[Fraction(0)] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(m):
            out[j * n + i][i * m + j] = Fraction(signs(i, j) if signs else 1)
    return out


def inverse(a):
    """Gauss-Jordan over Fractions; ``None`` if singular."""
    n = len(a)
    m = [row[:] + eye(n)[i] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [v / p for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


# ---------------------------------------------------------------------------
# groups by hand


def s3_elements():
    """S3 as permutation tuples, composed as functions ``(p*q)(i) = p(q(i))``."""
    return sorted(itertools.permutations(range(3)))


def s3_mul(p, q):
    return tuple(p[q[i]] for i in range(3))


def s3_inv(p):
    out = [0] * 3
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def group_from_table(table):
    n = len(table)
    e = next(x for x in range(n) if all(table[x][g] == g for g in range(n)))
    inv = [next(h for h in range(n) if table[g][h] == e) for g in range(n)]
    return e, inv


def linearize_binary(n, fn):
    """Matrix of the bilinear extension of ``fn: G x G -> G``."""
    out = [[Fraction(0)] * (n * n) for _ in range(n)]
    for g in range(n):
        for h in range(n):
            out[fn(g, h)][g * n + h] += 1
    return out


def skew_compatible(dot, circ) -> bool:
    n = len(dot)
    _, inv = group_from_table(dot)
    return all(
        circ[g][dot[h][t]] == dot[dot[circ[g][h]][inv[g]]][circ[g][t]]
        for g in range(n) for h in range(n) for t in range(n)
    )


def alpha_by_basis(n, m_fn):
    """``alpha(g) = sum_j e_j^* (x) m(g (x) e_j)`` for group-like bases.

    Derived by expanding ``(H*(x)m)(c(x)H)(H(x)a)`` on ``g``:
    ``g (x) sum_j e_j* (x) e_j`` is flipped to ``sum_j e_j* (x) g (x) e_j``.
    """
    out = [[Fraction(0)] * n for _ in range(n * n)]
    for g in range(n):
        for j in range(n):
            out[j * n + m_fn(g, j)][g] += 1
    return out
