import itertools
from fractions import Fraction

import numpy as np
import pytest

from wreathe import constructions as C
from wreathe import modular as mod
from wreathe.exact import fp
from wreathe.groups import generate
from wreathe.numberring import build_and_validate, local_data, reduce_ring_mod_p
from wreathe.twisted import TwistedRing
from wreathe.wedderburn import block_from_generators

EXMOD1 = C.gaussian_s3_ring


@pytest.fixture(scope="module")
def exmod2():
    R = C.exmod2_ring([2, 3, 31])
    out = {}
    for p in (2, 3, 31):
        A = mod.build_residue_algebra(R, p)
        J = mod.jacobson_radical(A)
        Q = A if J.dim == 0 else mod.quotient_algebra(A, J)[0]
        out[p] = (A, J, Q)
    return R, out


@pytest.fixture(scope="module")
def exmod1():
    R, _ = EXMOD1([2, 3])
    return R, {p: mod.build_residue_algebra(R, p) for p in (2, 3)}


def semisimple_part(A):
    J = mod.jacobson_radical(A)
    return (A if J.dim == 0 else mod.quotient_algebra(A, J)[0]), J


def all_vectors(d, p):
    for code in itertools.product(range(p), repeat=d):
        yield np.array(code, dtype=np.int64)


def nilpotent(A, x):
    return not np.any(A.pow(x, A.dim))


def brute_force_radical_check(A, J):
    """J is a nilpotent two-sided ideal and A/J has no nonzero element a with a*b nilpotent for all b."""
    p, d = A.p, A.dim
    if J.dim:
        E = np.eye(d, dtype=np.int64)
        prods = np.array([A.mul(x, y) for k in range(d) for j in J.rows for x, y in ((E[k], j), (j, E[k]))])
        assert fp.rank(np.vstack([J.rows, prods]), p) == J.dim
        power = J.rows
        for _ in range(d + 1):
            if not power.shape[0]:
                break
            power = fp.row_basis(np.array([A.mul(a, b) for a in power for b in J.rows]), p)
        assert power.shape[0] == 0
    Q = A if J.dim == 0 else mod.quotient_algebra(A, J)[0]
    vecs = list(all_vectors(Q.dim, p))
    for a in vecs[1:]:
        assert any(not nilpotent(Q, Q.mul(a, b)) for b in vecs), "nonzero nil right ideal in the quotient"


def test_build_dimensions(exmod2, exmod1):
    _, data = exmod2
    assert data[3][0].dim == 144
    assert exmod1[1][2].dim == 12
    G = generate([])
    R = build_and_validate(C.EXMOD2_MU, G, {}, [31])
    A = mod.build_residue_algebra(R, 31)
    assert A.dim == 6 and A.is_commutative()


def test_radicals(exmod2):
    _, data = exmod2
    assert data[3][1].dim == 0
    assert data[31][1].dim == 72
    G = generate([])
    A = mod.build_residue_algebra(build_and_validate([1, 0, 1], G, {}, [2]), 2)
    assert mod.jacobson_radical(A).dim == 1
    Q, J = semisimple_part(data[31][0])
    assert mod.jacobson_radical(data[31][2]).dim == 0


def test_centers(exmod2):
    _, data = exmod2
    assert mod.center(data[3][2]).dim == 4
    assert mod.center(data[31][2]).dim == 5
    A = mod.build_residue_algebra(build_and_validate(C.EXMOD2_MU, generate([]), {}, [31]), 31)
    assert mod.center(A).dim == A.dim


def test_blocks(exmod2, exmod1):
    _, data = exmod2
    b3 = mod.block_decompose(data[3][2])
    assert sorted((b.simple_dim, b.endo_field) for b in b3) == [(6, "F_3"), (6, "F_3"), (12, "F_3^2")]
    assert sorted(b.center_degree for b in b3) == [1, 1, 2]
    b31 = mod.block_decompose(data[31][2])
    assert sorted(b.simple_dim for b in b31) == [3, 3, 3, 3, 6] and all(b.split for b in b31)
    Q, _ = semisimple_part(exmod1[1][2])
    assert len(mod.block_decompose(Q)) == 2
    with pytest.raises(ValueError, match="radical nonzero"):
        mod.block_decompose(data[31][0])
    Q = data[31][2]
    es = [b.idempotent for b in b31]
    total = np.zeros(Q.dim, dtype=np.int64)
    for i, e in enumerate(es):
        total = (total + e) % 31
        for j, f in enumerate(es):
            assert np.array_equal(Q.mul(e, f), e if i == j else np.zeros(Q.dim, dtype=np.int64))
    assert np.array_equal(total, Q.one)


def test_v_sigma(exmod1, exmod2):
    R1 = exmod1[1][3].ring
    V, codim = mod.v_sigma(R1, 3, 0)
    assert codim == 1 and V.rows.tolist() == [[0, 1]]
    assert mod.v_sigma(R1, 3, R1.G.parse("(1,2)"))[1] == 0
    R = exmod2[0]
    V, codim = mod.v_sigma(R, 31, R.G.parse("(1,2)(3,4)"))
    assert codim == 2 and V.dim == 1
    # values of the spanning element at the three roots of the radical
    rd = reduce_ring_mod_p(R, 31)
    roots = [(-g.coeffs[0]) % 31 for g, _ in rd.factors]
    vals = sorted(sum(int(c) * pow(r, k, 31) for k, c in enumerate(V.rows[0])) % 31 for r in roots)
    assert vals[0] == 0 and (vals[1] + vals[2]) % 31 == 0
    assert mod.v_sigma(R, 3, R.G.parse("(1,2)"))[1] == 0


def test_brauer_z(exmod1, exmod2):
    assert mod.brauer_z(exmod1[1][3].ring, 3) == 1
    R = exmod2[0]
    assert mod.brauer_z(R, 3) == 4 and mod.brauer_z(R, 31) == 5 and mod.brauer_z(R, 2) == 1


def test_kulshammer(exmod2):
    A = mod.build_residue_algebra(build_and_validate(C.EXMOD2_MU, generate([]), {}, [31]), 31)
    LC, LCP, codim = mod.kulshammer_spaces(A)
    assert LC.dim == 0 and LCP == mod.jacobson_radical(A) and codim == 3
    S3 = C.untwisted_ring(["(1,2)", "(1,2,3)"], [2])
    assert mod.kulshammer_spaces(mod.build_residue_algebra(S3, 2))[2] == 2
    assert mod.kulshammer_spaces(exmod2[1][3][0])[2] == 4


def test_simplicity(exmod1, exmod2):
    assert mod.is_simple(mod.principal_residue_module(exmod1[1][3]))
    A = mod.build_residue_algebra(C.untwisted_ring(["(1,2)", "(1,2,3)"], [2]), 2)
    regular = mod.FqModule(A, [A.right_matrix(A.basis_vector(k)) for k in range(A.dim)], 2)
    assert not mod.is_simple(regular)
    M = mod.principal_residue_module(exmod2[1][3][0])
    assert M.dim == 6 and mod.is_simple(M)
    with pytest.raises(ValueError, match="module too large"):
        mod.is_simple(mod.principal_residue_module(exmod2[1][31][0]), bound=1000)


def test_module_axioms_are_checked(exmod1):
    A = exmod1[1][2]
    with pytest.raises(ValueError, match="not unital"):
        mod.FqModule(A, [np.zeros((1, 1), dtype=np.int64)] * A.dim, 2)


def test_brauer_nesbitt():
    T, blocks = C.s3_untwisted_data([2])
    R = T.R
    principal, sign, std = blocks
    res = mod.brauer_nesbitt_check(R, 2, std)
    assert res["hypothesis"] and res["simple"] and res["status"] == "verified" and res["bound"]
    assert mod.brauer_nesbitt_check(R, 2, principal)["status"] == "hypothesis not met"
    a, b = T.G.parse("(1,2)"), T.G.parse("(1,2,3)")
    # std conjugated by diag(1, 2): no longer integral at 2
    bad = block_from_generators(T, std.K, 2, {a: [[-1, 0], [2, 1]], b: [[0, Fraction(1, 2)], [-2, -1]]}, [[0, 0], [0, 0]])
    with pytest.raises(ValueError, match="not a lattice"):
        mod.brauer_nesbitt_check(R, 2, bad)


def test_semisimplicity_predict(exmod2, exmod1):
    R = exmod2[0]
    assert mod.semisimplicity_predict(R, 3, A=exmod2[1][3][0]) == (True, True)
    assert mod.semisimplicity_predict(R, 31, A=exmod2[1][31][0]) == (False, False)
    assert mod.semisimplicity_predict(exmod1[1][2].ring, 2, A=exmod1[1][2]) == (False, False)


def test_norm_surjectivity():
    assert mod.norm_surjectivity(2, 3, 1, 1)
    assert mod.norm_surjectivity(2, 3, 0, 1)
    assert mod.norm_surjectivity(3, 2, 1, 1)
    with pytest.raises(ValueError, match="hypothesis violated"):
        mod.norm_surjectivity(2, 2, 1, 1)


def test_simple_dims_divisible_by_residue_dim(exmod2):
    R, data = exmod2
    for p, (A, J, Q) in data.items():
        d0 = A.residue.dim0
        assert d0 == R.h // local_data(R, p).e
        assert all(b.simple_dim % d0 == 0 for b in mod.block_decompose(Q, check_radical=False))


def test_p_group_has_one_block():
    R = C.gauss_c2_ring([2])
    A = mod.build_residue_algebra(R, 2)
    Q, _ = semisimple_part(A)
    blocks = mod.block_decompose(Q)
    assert len(blocks) == 1 and blocks[0].simple_dim == A.residue.dim0 == 1


def test_codim_of_identity_class_when_unramified(exmod2):
    R = exmod2[0]
    for p in (2, 3):
        assert local_data(R, p).e == 1
        assert mod.v_sigma(R, p, 0)[1] == 1


def test_trivial_action_on_residue_field():
    R = C.untwisted_ring(["(1,2)", "(1,2,3)"], [3])
    from wreathe.groups import p_prime_class_reps
    assert mod.brauer_z(R, 3) == len(p_prime_class_reps(R.G, 3)) * 1


def test_radical_equals_jac_t_ideal(exmod2):
    A, J, _ = exmod2[1][31]
    assert mod.jac_T_ideal(A) == J


SMALL = [(EXMOD1, 2), (EXMOD1, 3), (C.gauss_c2_ring, 2), (C.gauss_c2_ring, 3),
         (lambda ps: C.untwisted_ring(["(1,2)", "(1,2,3)"], ps), 2),
         (lambda ps: C.untwisted_ring(["(1,2)", "(1,2,3)"], ps), 3),
         (lambda ps: C.untwisted_ring(["(1,2)"], ps), 2)]


@pytest.mark.parametrize("build,p", SMALL)
def test_radical_against_exhaustive_oracle(build, p):
    R = build([p])
    R = R[0] if isinstance(R, tuple) else R
    A = mod.build_residue_algebra(R, p)
    assert A.dim <= 40
    brute_force_radical_check(A, mod.jacobson_radical(A, verify=False))


def test_radical_of_upper_triangular_matrices():
    p, n = 2, 3
    units = []
    for i in range(n):
        for j in range(i, n):
            E = np.zeros((n, n), dtype=np.int64)
            E[i, j] = 1
            units.append(E)
    A = mod.algebra_from_matrices(p, units)
    J = mod.jacobson_radical(A)
    assert J.dim == 3
    brute_force_radical_check(A, J)
