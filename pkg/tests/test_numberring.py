from fractions import Fraction

import pytest

from wreathe.constructions import EXMOD2_MU, exmod2_ring, gauss_c2_ring, gaussian_s3_ring
from wreathe.exact.fields import FiniteField
from wreathe.exact.poly import Poly
from wreathe.groups import generate
from wreathe.numberring import (build_and_validate, dedekind_pmaximal, fixed_subring_basis, local_data,
                                projectivity_check, reduce_ring_mod_p)

ONE, ZERO = Fraction(1), Fraction(0)


def test_exi26_kernel():
    R, _ = gaussian_s3_ring()
    assert R.n == 3 and R.h == 2


def test_exmod2_kernel_is_klein_four():
    R = exmod2_ring([2, 3, 31])
    assert R.n == 4 and R.h == 6
    G = R.G
    assert sorted(G.name(s) for s in R.kernel) == sorted(["()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"])


def test_trivial_action_kernel_is_whole_group():
    G = generate(["(1,2)", "(1,2,3)"])
    R = build_and_validate([-2, 0, 1], G, {G.parse("(1,2)"): "X", G.parse("(1,2,3)"): "X"})
    assert R.n == 6


def test_action_errors():
    G = generate(["(1,2)"])
    with pytest.raises(ValueError, match="not an automorphism"):
        build_and_validate([1, 0, 1], G, {G.parse("(1,2)"): "X+1"})
    # zeta_5 -> zeta_5^2 has order 4, not 2
    with pytest.raises(ValueError, match="not a right action"):
        build_and_validate([1, 1, 1, 1, 1], G, {G.parse("(1,2)"): "X**2"})
    # theta = 2 zeta_5; theta -> 2 zeta_5^2 = theta^2 / 2
    C4 = generate(["(1,2,3,4)"])
    with pytest.raises(ValueError, match="action not p-integral"):
        build_and_validate([16, 8, 4, 2, 1], C4, {C4.parse("(1,2,3,4)"): "X**2/2"}, [2])
    with pytest.raises(ValueError, match="not a field"):
        build_and_validate([-1, 0, 1], G, {G.parse("(1,2)"): "-X"})


def test_right_action_law():
    R = exmod2_ring()
    G = R.G
    y = tuple(Fraction(k + 1, 3) for k in range(6))
    for s in range(0, G.order, 5):
        for t in range(0, G.order, 7):
            assert R.act(y, G.mul(s, t)) == R.act(R.act(y, s), t)


def test_fixed_subrings():
    R, (a, b) = gaussian_s3_ring()
    assert fixed_subring_basis(R, range(6), 3) == [[ONE, ZERO]]
    A3 = R.G.centralizer(b)
    assert sorted(map(tuple, fixed_subring_basis(R, A3, 3))) == [(ZERO, ONE), (ONE, ZERO)]
    assert fixed_subring_basis(R, [0], 3) == [[ONE, ZERO], [ZERO, ONE]]


def test_local_data_examples():
    ld = local_data(gauss_c2_ring([2]), 2)
    assert (ld.e, ld.f, ld.d, ld.s, ld.t, ld.delta) == (2, 1, 1, 1, 1, 2)
    R = exmod2_ring([3, 31])
    ld = local_data(R, 31)
    assert (ld.e, ld.f, ld.d, ld.delta, ld.t, ld.s) == (2, 1, 3, 3, 1, 0)
    ld = local_data(R, 3)
    assert (ld.e, ld.f, ld.d, ld.t, ld.delta) == (1, 2, 3, 0, 0)
    for ld in (local_data(R, 3), local_data(R, 31)):
        assert ld.e * ld.f * ld.d == 6 and ld.s <= ld.t and (ld.t == 0) == (ld.e == 1)


def test_dedekind():
    assert dedekind_pmaximal([1, 0, 1], 2)
    assert dedekind_pmaximal(EXMOD2_MU, 31)
    assert dedekind_pmaximal([-2, 0, 1], 2)
    assert not dedekind_pmaximal([-5, 0, 1], 2)  # Z[sqrt5] has index 2 in its maximal order


def test_projectivity():
    assert projectivity_check(gauss_c2_ring([2]), 2)[0] is False
    R = exmod2_ring([3, 31])
    assert projectivity_check(R, 31)[0] is True
    assert projectivity_check(R, 3)[0] is True


def test_reduction_examples():
    R, _ = gaussian_s3_ring([3])
    rd = reduce_ring_mod_p(R, 3)
    assert rd.dim == rd.dim0 == 2 and len(rd.factors) == 1
    rd = reduce_ring_mod_p(exmod2_ring([31]), 31)
    assert rd.dim == 6 and rd.dim0 == 3 and all(m == 2 and g.degree == 1 for g, m in rd.factors)
    rd = reduce_ring_mod_p(exmod2_ring([2]), 2)
    assert rd.dim == rd.dim0 == 6 and sorted(g.degree for g, _ in rd.factors) == [3, 3]
