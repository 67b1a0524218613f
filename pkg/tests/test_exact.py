import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wreathe.exact.fields import QQ, FiniteField, RingMismatch, valuation
from wreathe.exact.linalg import Matrix, det, linear_solve, matmul
from wreathe.exact.poly import Poly, factor_poly_fq, is_irreducible_fq
from wreathe.exact.smith import INF, smith_valuations

F2, F3, F31 = FiniteField(2), FiniteField(3), FiniteField(31)
EXMOD2_MU = [1, -3, 7, -9, 7, -3, 1]


def fpoly(coeffs, F):
    return Poly([F.convert(c) for c in coeffs], F)


def product(fac, F):
    out = Poly.const(1, F)
    for g, m in fac:
        for _ in range(m):
            out = out * g
    return out


def test_kernel_of_identity_over_f2_is_empty():
    I = Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]], F2)
    assert linear_solve(I, "kernel") == []


def test_kernel_of_row_11_over_f2():
    assert [list(v) for v in linear_solve(Matrix([[1, 1]], F2), "kernel")] == [[1, 1]]


def test_image_rank_of_gaussian_trace_gram():
    assert len(linear_solve(Matrix([[2, 0], [0, -2]]), "image")) == 2


def test_inconsistent_system_and_ring_mismatch():
    with pytest.raises(ValueError, match="no solution"):
        linear_solve(Matrix([[1, 1], [1, 1]]), "solve", [0, 1])
    with pytest.raises(RingMismatch, match="ring mismatch"):
        Matrix([[Fraction(1, 2), 1]], F2)


def test_smith_examples():
    assert smith_valuations([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 5) == [0, 0, 0]
    assert smith_valuations([[1, 0, 0], [0, 3, 0], [0, 0, 9]], 3) == [0, 1, 2]
    assert smith_valuations([[2, 0], [0, -2]], 2) == [1, 1]
    assert smith_valuations([[1, 2], [2, 4]], 3)[-1] == INF
    with pytest.raises(ValueError, match="not p-integral"):
        smith_valuations([[Fraction(1, 2)]], 2)


def test_factor_examples():
    fac = factor_poly_fq(fpoly([1, 0, 1], F2))
    assert fac == [(fpoly([1, 1], F2), 2)]
    fac = factor_poly_fq(fpoly(EXMOD2_MU, F2))
    assert sorted(g.coeffs for g, _ in fac) == sorted([(1, 1, 0, 1), (1, 0, 1, 1)])
    assert all(m == 1 for _, m in fac)
    fac = factor_poly_fq(fpoly(EXMOD2_MU, F31))
    assert sorted((g.coeffs, m) for g, m in fac) == sorted([((29, 1), 2), ((15, 1), 2), ((1, 1), 2)])
    with pytest.raises(ValueError, match="zero input"):
        factor_poly_fq(Poly([], F3))


@pytest.mark.parametrize("F", [F2, F3, FiniteField(3, 2), F31], ids=str)
def test_factor_roundtrip_random(F):
    rng = random.Random(F.q)
    for _ in range(200):
        deg = rng.randint(1, 12)
        f = Poly([rng.randrange(F.q) for _ in range(deg)] + [1 + rng.randrange(F.q - 1)], F)
        fac = factor_poly_fq(f, seed=rng.randrange(100))
        lead = Poly.const(f.lc, F)
        assert lead * product(fac, F) == f
        assert all(is_irreducible_fq(g) for g, _ in fac)


def test_factor_is_deterministic_for_a_seed():
    f = fpoly(EXMOD2_MU, F31)
    assert factor_poly_fq(f, seed=7) == factor_poly_fq(f, seed=7)


square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-30, 30), min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=60, deadline=None)
@given(square, st.sampled_from([2, 3, 5]))
def test_smith_sum_is_determinant_valuation(M, p):
    D = det([[Fraction(x) for x in r] for r in M])
    vals = smith_valuations(M, p)
    if D == 0:
        assert INF in vals
    else:
        assert sum(vals) == valuation(D, p)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda c: st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c),
                                                      min_size=1, max_size=4)))
def test_kernel_vectors_annihilate(M):
    rows = [[Fraction(x) for x in r] for r in M]
    ker = linear_solve(Matrix(rows), "kernel")
    image = linear_solve(Matrix(rows), "image")
    assert len(ker) + len(image) == len(rows[0])
    for v in ker:
        assert all(r[0] == 0 for r in matmul(rows, [[c] for c in v]))
