"""Vectorized linear algebra over a prime field F_p on int64 numpy arrays.

Entries are kept reduced to ``range(p)``.  Products are formed in int64, so
p must stay below 2**31 and inner dimensions small enough that
``n * (p-1)**2`` fits; every caller here is far inside that range.
"""
from __future__ import annotations

import numpy as np


def asmod(M, p):
    return np.asarray(M, dtype=np.int64) % p


def rref(M, p):
    """Reduced row echelon form mod p; returns (R, pivots) with R the nonzero rows."""
    A = asmod(M, p).copy()
    if A.ndim != 2 or A.size == 0:
        return A.reshape(0, A.shape[-1] if A.ndim == 2 else 0), []
    nr, nc = A.shape
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            A[rows] = (A[rows] - np.outer(col[rows], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M, p):
    return len(rref(M, p)[1])


def row_basis(M, p, chunk=2048):
    """RREF basis of the row space; streams tall inputs in chunks."""
    M = asmod(M, p)
    if M.shape[0] <= chunk:
        return rref(M, p)[0]
    basis = np.zeros((0, M.shape[1]), dtype=np.int64)
    for start in range(0, M.shape[0], chunk):
        block = M[start:start + chunk]
        if basis.shape[0]:
            block = reduce_rows(block, basis, p)
        basis = rref(np.vstack([basis, block]), p)[0]
        if basis.shape[0] == M.shape[1]:
            break
    return basis


def pivots_of(R):
    return [int(np.nonzero(r)[0][0]) for r in R]


def reduce_rows(V, R, p, piv=None):
    """Reduce rows of V modulo the row space of an RREF basis R."""
    V = asmod(V, p).copy()
    if R.shape[0] == 0:
        return V
    piv = pivots_of(R) if piv is None else piv
    coeff = V[:, piv].copy()
    return (V - coeff @ R) % p


def in_span(V, R, p):
    return not np.any(reduce_rows(np.atleast_2d(V), R, p))


def coords(V, R, p, piv=None):
    """Coordinates of rows of V (assumed in the span) w.r.t. RREF basis R."""
    piv = pivots_of(R) if piv is None else piv
    V = np.atleast_2d(asmod(V, p))
    return V[:, piv].copy()


def nullspace(M, p):
    """Basis (rows) of {x : M x = 0}."""
    M = asmod(M, p)
    n = M.shape[1]
    R, piv = rref(M, p)
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, fc in enumerate(free):
        out[k, fc] = 1
        for row, pc in zip(R, piv):
            out[k, pc] = (-row[fc]) % p
    return out


def left_kernel(M, p):
    """Basis (rows) of {v : v M = 0}, computed by tracking row operations."""
    M = asmod(M, p)
    nr = M.shape[0]
    aug = np.hstack([M, np.eye(nr, dtype=np.int64)])
    nc = M.shape[1]
    # rows of the echelon form whose M-part vanishes span the left kernel
    full = _rref_all_rows(aug, p)
    out = [row[nc:] for row in full if not np.any(row[:nc])]
    if not out:
        return np.zeros((0, nr), dtype=np.int64)
    return rref(np.array(out), p)[0]


def _rref_all_rows(A, p):
    """Row echelon form keeping zero rows (to read off row dependencies)."""
    A = asmod(A, p).copy()
    nr, nc = A.shape
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            A[rows] = (A[rows] - np.outer(col[rows], A[r])) % p
        r += 1
    return A


def solve_left(B, V, p):
    """Coefficients C with C @ B = V (rows of B need not be independent)."""
    B = asmod(B, p)
    V = np.atleast_2d(asmod(V, p))
    k = B.shape[0]
    aug = np.hstack([B, np.eye(k, dtype=np.int64)])
    R, piv = rref(aug, p)
    n = B.shape[1]
    basis_rows = [i for i, c in enumerate(piv) if c < n]
    RB = R[basis_rows, :n]
    T = R[basis_rows, n:]
    rest = reduce_rows(V, RB, p, [piv[i] for i in basis_rows])
    if np.any(rest):
        raise ValueError("no solution")
    C = coords(V, RB, p, [piv[i] for i in basis_rows])
    return (C @ T) % p


def inverse(M, p):
    M = asmod(M, p)
    n = M.shape[0]
    R, piv = rref(np.hstack([M, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return R[:, n:]


def matpow(M, e, p):
    n = M.shape[0]
    result = np.eye(n, dtype=np.int64)
    base = asmod(M, p)
    while e:
        if e & 1:
            result = (result @ base) % p
        base = (base @ base) % p
        e >>= 1
    return result


def complement_pivots(R, n):
    s = set(pivots_of(R))
    return [c for c in range(n) if c not in s]
