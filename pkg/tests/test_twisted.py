import random
from fractions import Fraction

import pytest

from wreathe.constructions import exi27_data, gauss_c2_ring, gaussian_s3_ring, untwisted_ring
from wreathe.exact.linalg import det, matmul, solve_left
from wreathe.groups import generate
from wreathe.numberring import build_and_validate
from wreathe.twisted import (TwistedRing, assumption_normal_cover, bilinear_gram, center_basis,
                             center_dimension_untwisted, central_form_on, central_gram, epsilon1, form,
                             maschke_coretraction, principal_image_rank, principal_rep, regular_module, submodule)


@pytest.fixture(scope="module")
def exi26():
    R, (a, b) = gaussian_s3_ring()
    return TwistedRing(R), a, b


def rand_element(T, rnd, terms=3):
    d = {}
    for _ in range(terms):
        d[rnd.randrange(T.g)] = tuple(Fraction(rnd.randint(-4, 4), rnd.randint(1, 3)) for _ in range(T.m))
    return T.element(d)


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def test_basic_products(exi26):
    T, a, b = exi26
    G = T.G
    c = G.inv(b)
    assert T.group_element(a) * T.group_element(b) == T.group_element(G.mul(a, b))
    i = (0, 1)
    assert T.element({a: i}) * T.group_element(a) == T.scalar((0, -1))
    z = T.element({b: i}) - T.element({c: i})
    assert z * z == T.element({0: 2, b: -1, c: -1})


def test_incompatible_rings(exi26):
    T, _, _ = exi26
    T2 = TwistedRing(gauss_c2_ring())
    with pytest.raises(ValueError, match="incompatible rings"):
        T.one() * T2.one()


def test_associativity_random(exi26):
    T, _, _ = exi26
    rnd = random.Random(0)
    for _ in range(500):
        x, y, z = (rand_element(T, rnd) for _ in range(3))
        assert (x * y) * z == x * (y * z)
    assert T.one() * x == x == x * T.one()


def test_center_basis_exi26(exi26):
    T, a, b = exi26
    c = T.G.inv(b)
    CB = center_basis(T)
    i = (0, 1)
    expected = {T.one(), T.group_element(b) + T.group_element(c), T.element({b: i}) - T.element({c: i})}
    assert len(CB) == 3
    # same elements up to sign
    got = set(CB.elements) | {-z for z in CB.elements}
    assert expected <= got
    B = T.basis()
    assert all(z * x == x * z for z in CB.elements for x in B)
    assert not assumption_normal_cover(T)


def test_center_basis_other_cases():
    T = TwistedRing(untwisted_ring(["(1,2)", "(1,2,3)"]))
    assert len(center_basis(T)) == 3
    T = TwistedRing(gauss_c2_ring())
    assert center_basis(T).elements == [T.one()]
    T, _ = exi27_data()
    CB = center_basis(T)
    assert assumption_normal_cover(T)
    # class sums of N with rational coefficients
    assert all(all(y[1:] == (0,) * (T.m - 1) for y in z.coeffs) for z in CB.elements)


def test_center_dimension_equals_untwisted(exi26):
    T, _, _ = exi26
    assert len(center_basis(T)) == center_dimension_untwisted(T) == 3


def test_epsilon1(exi26):
    T, a, b = exi26
    e = epsilon1(T)
    assert e == T.element({0: Fraction(1, 3), b: Fraction(1, 3), T.G.inv(b): Fraction(1, 3)})
    assert e * e == e and T.is_central(e)
    assert principal_rep(T, e) == identity(2)
    with pytest.raises(ValueError, match="Maschke fails"):
        epsilon1(T, 3)
    Tf = TwistedRing(gauss_c2_ring())
    assert epsilon1(Tf) == Tf.one()
    Tu = TwistedRing(untwisted_ring(["(1,2)", "(1,2,3)"]))
    assert epsilon1(Tu) == Tu.element({s: Fraction(1, 6) for s in range(6)})


def test_forms(exi26):
    T, a, b = exi26
    assert form(T, T.one(), T.one()) == 2
    assert form(T, T.group_element(b), T.group_element(T.G.inv(b))) == T.R.h
    Gm = bilinear_gram(T)
    assert Gm == [list(r) for r in zip(*Gm)] and det(Gm) != 0
    CB = center_basis(T)
    Z = central_gram(T, CB)
    assert det(Z) != 0
    for x in CB.elements:
        for y in CB.elements:
            assert T.R.h * central_form_on(T, CB, x, y) == form(T, x, y)
    rnd = random.Random(1)
    for _ in range(50):
        x, y, z = (rand_element(T, rnd) for _ in range(3))
        assert form(T, x * y, z) == form(T, x, y * z)


def test_principal_rep(exi26):
    T, _, _ = exi26
    assert principal_rep(T, T.one()) == identity(2)
    rnd = random.Random(2)
    for _ in range(30):
        x, y = rand_element(T, rnd), rand_element(T, rnd)
        assert principal_rep(T, x * y) == matmul(principal_rep(T, x), principal_rep(T, y))
    assert principal_image_rank(TwistedRing(gauss_c2_ring())) == 4


def test_maschke_splitting(exi26):
    T, _, _ = exi26
    M = regular_module(T)
    e = epsilon1(T)
    B = T.basis()
    sub, basis = submodule(M, [(e * x).vector() for x in B])
    f = [solve_left(basis, (e * x).vector()) for x in B]
    i = maschke_coretraction(M, sub, f)
    assert matmul(i, f) == identity(sub.dim)
    assert sub.is_module_map(i, M)


def test_maschke_trivial_group():
    G = generate([])
    T = TwistedRing(build_and_validate([1, 0, 1], G, {}))
    M = regular_module(T)
    assert maschke_coretraction(M, M, identity(2)) == identity(2)


def test_maschke_integral_variant():
    T = TwistedRing(gauss_c2_ring([2]))
    M = regular_module(T)
    i = maschke_coretraction(M, M, identity(4), p=2)
    assert matmul(i, identity(4)) == [[2 * x for x in r] for r in identity(4)]
    with pytest.raises(ValueError, match="not an epimorphism"):
        maschke_coretraction(M, M, [[0] * 4 for _ in range(4)])
