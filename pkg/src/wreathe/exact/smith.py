"""Smith form over the local ring Z_(p): elementary divisor valuations only."""
from __future__ import annotations

import math
from fractions import Fraction

from .fields import is_p_integral, valuation

INF = math.inf


def _check_integral(A, p):
    for r in A:
        for x in r:
            if not is_p_integral(x, p):
                raise ValueError("not p-integral")


def smith_valuations(M, p: int):
    """Ascending valuations of the elementary divisors of M over Z_(p).

    Rank deficiency is padded with ``INF`` up to ``min(rows, cols)``.
    """
    return smith_reduce(M, p)[0]


def smith_reduce(M, p: int, track_columns: bool = False):
    """Diagonalize M by unimodular row/column operations over Z_(p).

    Returns ``(valuations, Vinv)`` where, if ``track_columns``, the first
    ``rank`` rows of ``Vinv`` form a Z_(p)-basis of the saturation of the
    row lattice of M.
    """
    A = [[Fraction(x) for x in r] for r in M]
    _check_integral(A, p)
    nr = len(A)
    nc = len(A[0]) if A else 0
    Vinv = [[Fraction(int(i == j)) for j in range(nc)] for i in range(nc)] if track_columns else None
    vals = []
    for k in range(min(nr, nc)):
        best, bi, bj = INF, -1, -1
        for i in range(k, nr):
            row = A[i]
            for j in range(k, nc):
                if row[j] != 0:
                    v = valuation(row[j], p)
                    if v < best:
                        best, bi, bj = v, i, j
                        if v == 0:
                            break
            if best == 0:
                break
        if best == INF:
            vals.extend([INF] * (min(nr, nc) - k))
            break
        A[k], A[bi] = A[bi], A[k]
        if bj != k:
            for r in A:
                r[k], r[bj] = r[bj], r[k]
            if track_columns:
                Vinv[k], Vinv[bj] = Vinv[bj], Vinv[k]
        piv = A[k][k]
        # clear column k below the pivot
        for i in range(k + 1, nr):
            if A[i][k] != 0:
                f = A[i][k] / piv
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
        # clear row k right of the pivot
        for j in range(k + 1, nc):
            if A[k][j] != 0:
                f = A[k][j] / piv
                for r in A:
                    r[j] -= f * r[k]
                if track_columns:
                    # column op col_j -= f col_k; inverse acts on rows: row_k += f row_j
                    Vinv[k] = [a + f * b for a, b in zip(Vinv[k], Vinv[j])]
        vals.append(best)
    return sorted(vals), Vinv


def saturate(rows, p: int):
    """Z_(p)-basis of (Q-span of rows) intersected with Z_(p)^n."""
    if not rows:
        return []
    scaled = []
    for r in rows:
        r = [Fraction(x) for x in r]
        m = min((valuation(x, p) for x in r if x != 0), default=0)
        scaled.append([x / Fraction(p) ** m for x in r])
    vals, Vinv = smith_reduce(scaled, p, track_columns=True)
    rk = sum(1 for v in vals if v != INF)
    return [list(Vinv[i]) for i in range(rk)]


def colength_of_rows(sub, sup, p: int) -> int:
    """Length of (Z_(p)-span sup)/(Z_(p)-span sub) for full lattices sub within sup."""
    from .linalg import inverse, matmul

    T = matmul(sub, inverse(sup))
    vals = smith_valuations(T, p)
    if any(v == INF for v in vals) or any(v < 0 for v in vals):
        raise ValueError("lattice is not contained in the overlattice")
    return int(sum(vals))
