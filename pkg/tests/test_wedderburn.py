import random
from fractions import Fraction

import pytest

from wreathe import constructions as C
from wreathe.scenario import parse_scenario, shipped
from wreathe.twisted import TwistedRing, center_basis, epsilon1, principal_rep
from wreathe.wedderburn import (QQ_ALGEBRA, FieldAlgebra, QuaternionAlgebra, WedderburnData, central_idempotents,
                                central_plancherel_check, character_support_check, dimension_audits,
                                fourier_invert, noether_invert, orthogonality_sum, plancherel_check,
                                reduced_trace, schur_expected, schur_sum)


def shipped_data(name):
    sc = parse_scenario(shipped(name))
    T = TwistedRing(sc.ring())
    return sc, sc.wedderburn(T)


@pytest.fixture(scope="module")
def exi25():
    return shipped_data("exi25")[1]


@pytest.fixture(scope="module")
def exi26():
    return shipped_data("exi26")[1]


@pytest.fixture(scope="module")
def exi27():
    return shipped_data("exi27")[1]


@pytest.mark.parametrize("name,builder", [("exi25", C.exi25_data), ("exi26", C.exi26_data), ("exi27", C.exi27_data),
                                          ("s3_untwisted", C.s3_untwisted_data)])
def test_shipped_matrices_match_constructions(name, builder):
    _, W = shipped_data(name)
    _, blocks = builder()
    assert [b.images for b in W.blocks] == [b.images for b in blocks]


def test_reduced_traces():
    H = QuaternionAlgebra(-1, -1)
    assert reduced_trace(H, (Fraction(3), Fraction(5), Fraction(7), Fraction(1))) == 6
    K = FieldAlgebra([-3, 0, 1])
    assert reduced_trace(K, K.F.gen) == 0
    Z3 = FieldAlgebra([1, 1, 1])
    assert reduced_trace(Z3, Z3.one) == 2
    assert (H.c, H.d, H.r) == (1, 2, 4)


def test_exi25_values(exi25):
    W = exi25
    T = W.T
    one = T.one()
    assert plancherel_check(W, one, one) == (3, 3, True)
    assert schur_sum(W, 1, 0, 0, 1, 0, 0) == (Fraction(3),)
    assert schur_sum(W, 1, 0, 0, 2, 0, 0) == (Fraction(0),)
    assert orthogonality_sum(W, 2, 2) == 18
    assert orthogonality_sum(W, 1, 2) == 0
    assert central_plancherel_check(W, one, one) == (1, 1, True)
    eps = central_idempotents(W)
    total = T.zero()
    for e in eps:
        total = total + e
    assert total == one
    audit = dimension_audits(W, [3])
    assert audit["gh"] == 27 and audit["block_dims"] == [9, 18]


def test_exi26_values(exi26):
    W = exi26
    T = W.T
    a, b = T.G.parse("(1,2)"), T.G.parse("(1,2,3)")
    i = (0, 1)
    assert W.character(1, T.element({b: i})) == 0
    assert W.character(1, T.group_element(a)) == 0
    assert W.character(1, T.one()) == T.R.h
    assert character_support_check(W)
    eps = central_idempotents(W)
    assert eps[0] == epsilon1(T)
    audit = dimension_audits(W)
    assert audit["block_dims"] == [4, 8] and audit["center_dims"] == [1, 2] and audit["classes_of_N"] == 3
    z = T.element({b: i}) - T.element({T.G.inv(b): i})
    lhs, rhs, ok = central_plancherel_check(W, z, z)
    assert ok and lhs == rhs
    with pytest.raises(ValueError, match="not central"):
        central_plancherel_check(W, T.group_element(a), T.one())


def test_exi27_values(exi27):
    W = exi27
    audit = dimension_audits(W)
    assert audit["gh"] == 32 and audit["block_dims"] == [16, 16] and audit["center_dims"] == [1, 1]
    assert audit["classes_of_N"] == 2
    central_idempotents(W)


def test_characters_on_idempotents(exi26):
    W = exi26
    eps = central_idempotents(W)
    for i, b in enumerate(W.blocks, 1):
        for j, e in enumerate(eps, 1):
            assert W.character(i, e) == (b.x * b.c * b.d if i == j else 0)


def test_fourier_roundtrips(exi26):
    W = exi26
    T = W.T
    for x in T.basis():
        assert fourier_invert(W, W.omega_all(x)) == x
    rnd = random.Random(0)
    for _ in range(10):
        phi = [[[b.K.convert(tuple(Fraction(rnd.randint(-3, 3)) for _ in range(b.K.dim))) for _ in range(b.x)]
                for _ in range(b.x)] for b in W.blocks]
        assert list(W.omega_all(fourier_invert(W, phi))) == phi


def test_plancherel_random(exi27):
    W = exi27
    T = W.T
    rnd = random.Random(3)
    for _ in range(200):
        x = T.element({rnd.randrange(T.g): tuple(Fraction(rnd.randint(-2, 2)) for _ in range(T.m))})
        y = T.element({rnd.randrange(T.g): tuple(Fraction(rnd.randint(-2, 2)) for _ in range(T.m))})
        assert plancherel_check(W, x, y)[2]


def test_schur_full_enumeration(exi26):
    W = exi26
    idx = [(i, a, b) for i, blk in enumerate(W.blocks, 1) for a in range(blk.x) for b in range(blk.x)]
    for u in idx:
        for v in idx:
            assert schur_sum(W, *u, *v) == schur_expected(W, *u, *v)
    with pytest.raises(IndexError, match="index out of range"):
        schur_sum(W, 3, 0, 0, 1, 0, 0)


def test_noether_inversion():
    R, _ = C.gaussian_s3_ring()
    T = TwistedRing(C.gauss_c2_ring())
    ident = [[Fraction(int(i == j)) for j in range(2)] for i in range(2)]
    assert noether_invert(T, ident) == T.one()
    for a in range(2):
        for b in range(2):
            E = [[Fraction(int((i, j) == (a, b))) for j in range(2)] for i in range(2)]
            assert principal_rep(T, noether_invert(T, E)) == E
    T6 = TwistedRing(R)
    x = T6.element({1: (Fraction(1), Fraction(2))})
    assert noether_invert(T6, principal_rep(T6, x)) == epsilon1(T6) * x


def test_incomplete_data_is_rejected(exi26):
    W = WedderburnData(exi26.T, exi26.blocks[:1])
    with pytest.raises(ValueError, match="missing blocks"):
        plancherel_check(W, W.T.one(), W.T.one())
