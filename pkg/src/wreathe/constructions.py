"""Explicit constructions of representation data for the shipped scenarios.

These are used to generate the matrices stored in the scenario files and,
in the tests, to re-derive them independently of the files.
"""
from __future__ import annotations

from fractions import Fraction

from .groups import generate
from .numberring import NumberField, build_and_validate
from .twisted import TwistedRing
from .wedderburn import (QQ_ALGEBRA, FieldAlgebra, QuaternionAlgebra, block_from_generators, principal_block,
                         representation_from_idempotent)

HALF = Fraction(1, 2)


def cyclotomic_poly(n: int):
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    import sympy

    X = sympy.Symbol("X")
    P = sympy.Poly(sympy.cyclotomic_poly(n, X), X)
    return [int(c) for c in reversed(P.all_coeffs())]


def gauss_period_ring(p: int = 3):
    """C_{p^2} acting through C_p on Q(pi) with pi = 2 - zeta - zeta^-1 (p = 3 only)."""
    if p != 3:
        raise ValueError("only p = 3 is supported")
    G = generate(["(1,2,3,4,5,6,7,8,9)"])
    s = G.parse("(1,2,3,4,5,6,7,8,9)")
    # pi = 2 - (zeta + zeta^-1) has minimal polynomial X^3 - 6X^2 + 9X - 3 and
    # sigma: zeta -> zeta^4 sends pi to 6 - 5 pi + pi^2
    R = build_and_validate([-3, 9, -6, 1], G, {s: "6 - 5*X + X**2"})
    return R, s


def cyclotomic_block(T: TwistedRing, s: int, p: int = 3):
    """The module Q(zeta_{p^2}) over K = Q(zeta_p), sigma acting by y -> y^sigma zeta.

    Basis 1, zeta, ..., zeta^(p-1) over K; the p-local coordinates of
    zeta^(k + p j) are read off the power basis of Q(zeta_{p^2}).
    """
    q = p * p
    Z = NumberField(cyclotomic_poly(q))
    Kmu = cyclotomic_poly(p)
    K = FieldAlgebra(Kmu)
    zeta = Z.gen

    def coords(y):
        # y in power basis of Z (degree p(p-1)); zeta^(k + p j) = zeta^k w^j
        rows = []
        for k in range(p):
            rows.append(tuple(Fraction(y[k + p * j]) for j in range(p - 1)))
        return rows

    def frob(y):
        # zeta -> zeta^(1+p)
        img = Z.pow(zeta, 1 + p)
        acc = Z.zero
        for k, c in enumerate(y):
            if c:
                acc = Z.add(acc, Z.scale(c, Z.pow(img, k)))
        return acc

    def matrix(f):
        M = []
        for a in range(p):
            v = Z.pow(zeta, a)
            M.append([K.convert(c) for c in coords(f(v))])
        return M

    sigma_mat = matrix(lambda y: Z.mul(frob(y), zeta))
    pi = Z.sub(Z.convert(2), Z.add(zeta, Z.inv(zeta)))
    gamma_mat = matrix(lambda y: Z.mul(y, pi))
    return block_from_generators(T, K, p, {s: sigma_mat}, gamma_mat, index=2)


def exi25_data():
    R, s = gauss_period_ring(3)
    T = TwistedRing(R)
    return T, [principal_block(T, [s]), cyclotomic_block(T, s, 3)]


def gaussian_s3_ring(primes=()):
    G = generate(["(1,2)", "(1,2,3)"])
    a, b = G.parse("(1,2)"), G.parse("(1,2,3)")
    return build_and_validate([1, 0, 1], G, {a: "-X", b: "X"}, primes), (a, b)


def exi26_data():
    R, (a, b) = gaussian_s3_ring()
    T = TwistedRing(R)
    G = T.G
    c = G.inv(b)
    i = (0, 1)
    z = T.element({b: i}) - T.left_coefficient(i, c)
    eps2 = T.element({0: Fraction(2, 3), b: Fraction(-1, 3), c: Fraction(-1, 3)})
    e = eps2 * T.element({0: HALF, a: HALF})
    w = z * e
    B2 = representation_from_idempotent(T, e, [e, w], FieldAlgebra([-3, 0, 1]), index=2, gens=[a, b])
    return T, [principal_block(T, [a, b]), B2]


Q8_GENERATORS = ("(1,2,5,6)(3,8,7,4)", "(1,3,5,7)(2,4,6,8)")


def q8_ring(primes=()):
    """Q8 in its regular permutation representation acting on Q(zeta_8)."""
    G = generate(list(Q8_GENERATORS))
    i, j = G.parse(Q8_GENERATORS[0]), G.parse(Q8_GENERATORS[1])
    # zeta^i = zeta^-1 = -zeta^3, zeta^j = zeta^3
    return build_and_validate([1, 0, 0, 0, 1], G, {i: "-X**3", j: "X**3"}, primes), (i, j)


def exi27_idempotent(T, i, j):
    z = T.L.gen
    i2 = T.G.mul(i, i)
    e = T.element({0: HALF, i2: -HALF}) * (T.one().scale(HALF) + T.left_coefficient(z, j).scale(HALF))
    I = e * T.left_coefficient(z, i) * e
    J = e * (T.scalar(z) + T.group_element(i)) * e
    return e, I, J


def exi27_data():
    R, (i, j) = q8_ring()
    T = TwistedRing(R)
    e, I, J = exi27_idempotent(T, i, j)
    B2 = representation_from_idempotent(T, e, [e, I, J, I * J], QuaternionAlgebra(-1, -1), index=2, gens=[i, j])
    return T, [principal_block(T, [i, j]), B2]


def untwisted_ring(generators, primes=()):
    """The trivial action of a permutation group on Q."""
    G = generate(list(generators))
    return build_and_validate([0, 1], G, {G.parse(c): "X" for c in generators}, primes)


def s3_untwisted_data(primes=()):
    """QS_3 with the trivial, sign and integral standard representations."""
    R = untwisted_ring(["(1,2)", "(1,2,3)"], primes)
    T = TwistedRing(R)
    a, b = T.G.parse("(1,2)"), T.G.parse("(1,2,3)")
    sign = block_from_generators(T, QQ_ALGEBRA, 1, {a: [[-1]], b: [[1]]}, [[0]], index=2)
    # the lattice {v in Z^3 : sum v = 0} with basis e1 - e2, e2 - e3
    std = block_from_generators(T, QQ_ALGEBRA, 2, {a: [[-1, 0], [1, 1]], b: [[0, 1], [-1, -1]]}, [[0, 0], [0, 0]], index=3)
    return T, [principal_block(T, [a, b]), sign, std]


def c2_untwisted_data(primes=()):
    R = untwisted_ring(["(1,2)"], primes)
    T = TwistedRing(R)
    c = T.G.parse("(1,2)")
    sign = block_from_generators(T, QQ_ALGEBRA, 1, {c: [[-1]]}, [[0]], index=2)
    return T, [principal_block(T, [c]), sign]


def gauss_c2_ring(primes=()):
    """Complex conjugation on Q(i), a faithful action."""
    G = generate(["(1,2)"])
    return build_and_validate([1, 0, 1], G, {G.parse("(1,2)"): "-X"}, primes)


EXMOD2_MU = [1, -3, 7, -9, 7, -3, 1]


def exmod2_ring(primes=()):
    G = generate(["(1,2)", "(1,2,3,4)"])
    return build_and_validate(EXMOD2_MU, G, {G.parse("(1,2)"): "1 - X", G.parse("(1,2,3,4)"): "1/X"}, primes)


def exmod2_s3_ring(primes=()):
    """The subgroup <(1,2), (1,2,3)> of S_4 meets the kernel trivially, so it acts faithfully."""
    R4 = exmod2_ring()
    H = generate(["(1,2)", "(1,2,3)"])
    action = {}
    for c in ("(1,2)", "(1,2,3)"):
        action[H.parse(c)] = list(R4.action[R4.G.parse(c)])
    return build_and_validate(EXMOD2_MU, H, action, primes)
