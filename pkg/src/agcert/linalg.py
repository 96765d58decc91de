"""Exact linear algebra over a field (entries are Rat or NFElem)."""

from __future__ import annotations

from typing import Callable, Sequence


def rref(rows: Sequence[Sequence], zero=0):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                row_r = m[r]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], row_r)]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def kernel(rows: Sequence[Sequence], ncols: int, zero, one) -> list:
    """Basis of the right kernel {v : M v = 0}, in reduced echelon normalization."""
    if not rows:
        basis = []
        for j in range(ncols):
            v = [zero] * ncols
            v[j] = one
            basis.append(v)
        return basis
    m, piv = rref(rows)
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(piv):
            if m[i][f]:
                v[p] = -m[i][f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence):
    """Unique solution of a square nonsingular system."""
    n = len(a)
    aug = [list(a[i]) + [b[i]] for i in range(n)]
    m, piv = rref(aug)
    if piv != list(range(n)):
        raise ArithmeticError("singular system")
    return [m[i][n] for i in range(n)]


def inverse(a: Sequence[Sequence], zero, one):
    n = len(a)
    aug = [list(a[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    m, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ArithmeticError("singular matrix")
    return [row[n:] for row in m]


def det(a: Sequence[Sequence], one=1):
    """Determinant by Gaussian elimination over a field."""
    m = [list(r) for r in a]
    n = len(m)
    d = one
    for c in range(n):
        piv = None
        for i in range(c, n):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            return d * 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d = d * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def bareiss_det(a: Sequence[Sequence], exact_div: Callable, is_zero: Callable = lambda x: not x):
    """Fraction-free determinant over an integral domain with exact division."""
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = None
    for k in range(n - 1):
        if is_zero(m[k][k]):
            swap = None
            for i in range(k + 1, n):
                if not is_zero(m[i][k]):
                    swap = i
                    break
            if swap is None:
                return m[k][k] * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                v = row_i[j] * pk - mik * row_k[j]
                row_i[j] = v if prev is None else exact_div(v, prev)
            row_i[k] = pk * 0
        prev = pk
    res = m[n - 1][n - 1]
    return res if sign > 0 else -res


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = a[i][0] * b[0][j]
            for t in range(1, k):
                s = s + a[i][t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        s = row[0] * v[0]
        for x, y in zip(row[1:], v[1:]):
            s = s + x * y
        out.append(s)
    return out
