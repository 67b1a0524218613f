"""Exact dense linear algebra over a field object.

Vectors are rows.  ``rref`` is the workhorse; kernels are right kernels
(``M @ v = 0``) unless named otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import QQ, RingMismatch


@dataclass(frozen=True)
class Matrix:
    """Rectangular matrix whose entries all lie in ``ring``."""

    rows: tuple
    ring: object = QQ

    def __init__(self, rows, ring=QQ):
        rows = tuple(tuple(r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("matrix is not rectangular")
        for r in rows:
            for x in r:
                if not ring.contains(x):
                    raise RingMismatch("ring mismatch")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ring", ring)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def tolist(self):
        return [list(r) for r in self.rows]


def rref(M, F=QQ):
    """Reduced row echelon form. Returns (rows, pivot columns)."""
    A = [list(r) for r in M]
    if not A:
        return [], []
    nr, nc = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if not F.is_zero(A[i][c])), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, x) for x in A[r]]
        for i in range(nr):
            if i != r and not F.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M, F=QQ) -> int:
    return len(rref(M, F)[1])


def kernel(M, F=QQ, ncols=None):
    """Basis of {v : M v = 0} as a list of vectors."""
    if not M:
        n = ncols or 0
        return [[F.one if i == j else F.zero for i in range(n)] for j in range(n)]
    R, piv = rref(M, F)
    n = len(M[0])
    free = [c for c in range(n) if c not in set(piv)]
    basis = []
    for fc in free:
        v = [F.zero] * n
        v[fc] = F.one
        for row, pc in zip(R, piv):
            v[pc] = F.neg(row[fc])
        basis.append(v)
    return basis


def left_kernel(M, F=QQ):
    """Basis of {v : v M = 0}."""
    if not M:
        return []
    return kernel(transpose(M), F)


def row_space(M, F=QQ):
    return rref(M, F)[0]


def transpose(M):
    return [list(c) for c in zip(*M)]


def matmul(A, B, F=QQ):
    Bt = transpose(B)
    out = []
    for row in A:
        out.append([_dot(row, col, F) for col in Bt])
    return out


def _dot(u, v, F):
    acc = F.zero
    for a, b in zip(u, v):
        if not F.is_zero(a) and not F.is_zero(b):
            acc = F.add(acc, F.mul(a, b))
    return acc


def vecmat(v, M, F=QQ):
    n = len(M[0]) if M else 0
    out = [F.zero] * n
    for a, row in zip(v, M):
        if F.is_zero(a):
            continue
        out = [F.add(o, F.mul(a, r)) for o, r in zip(out, row)]
    return out


def identity(n, F=QQ):
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def inverse(M, F=QQ):
    n = len(M)
    aug = [list(r) + e for r, e in zip(M, identity(n, F))]
    R, piv = rref(aug, F)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in R]


def det(M, F=QQ):
    A = [list(r) for r in M]
    n = len(A)
    d = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if not F.is_zero(A[i][c])), None)
        if piv is None:
            return F.zero
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = F.neg(d)
        d = F.mul(d, A[c][c])
        inv = F.inv(A[c][c])
        for i in range(c + 1, n):
            if not F.is_zero(A[i][c]):
                f = F.mul(A[i][c], inv)
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[c])]
    return d


def solve(M, b, F=QQ):
    """One solution x of M x = b, or raise ``ValueError('no solution')``."""
    n = len(M[0]) if M else 0
    aug = [list(r) + [bi] for r, bi in zip(M, b)]
    R, piv = rref(aug, F)
    if n in piv:
        raise ValueError("no solution")
    x = [F.zero] * n
    for row, pc in zip(R, piv):
        x[pc] = row[n]
    return x


def solve_left(B, v, F=QQ):
    """Coefficients c with c B = v (B given by rows), or ``ValueError``."""
    return solve(transpose(B), v, F)


def linear_solve(M: Matrix, mode: str = "kernel", b=None):
    """Kernel, image (row space) or a solution of M x = b over M's field."""
    if not isinstance(M, Matrix):
        M = Matrix(M)
    F = M.ring
    rows = M.tolist()
    if mode == "kernel":
        return kernel(rows, F, ncols=M.ncols)
    if mode == "image":
        return row_space(rows, F)
    if mode == "solve":
        if b is None:
            raise ValueError("solve mode needs a right-hand side")
        if isinstance(b, Matrix):
            if b.ring != F:
                raise RingMismatch("ring mismatch")
            b = [r[0] for r in b.rows]
        for x in b:
            if not F.contains(x):
                raise RingMismatch("ring mismatch")
        return solve(rows, list(b), F)
    raise ValueError(f"unknown mode {mode!r}")


def as_fractions(M):
    return [[Fraction(x) for x in r] for r in M]
