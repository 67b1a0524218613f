"""Finite-dimensional algebras over F_p and the residue twisted group ring.

Algebras are stored by dense structure constants C[i, j, k] (b_i b_j = sum_k
C[i, j, k] b_k) as int64 arrays reduced mod p; elements are row vectors.
Modules are right modules: v . (ab) = (v . a) . b, i.e. v @ M_a @ M_b.
"""
from __future__ import annotations

import random
from math import gcd, isqrt
from dataclasses import dataclass, field

import numpy as np

from .exact import fp
from .exact.fields import FiniteField, is_prime, valuation
from .exact.poly import Poly, factor_poly_fq
from .groups import p_prime_class_reps
from .numberring import GaloisNumberRing, local_data, reduce_ring_mod_p

SPIN_BOUND = 2_000_000
FULL_ASSOC_DIM = 40
ASSOC_SAMPLES = 32


@dataclass(frozen=True)
class SubspaceBasis:
    rows: np.ndarray  # RREF over F_p
    ambient: int
    p: int

    @classmethod
    def span(cls, vectors, ambient, p):
        V = np.asarray(vectors, dtype=np.int64).reshape(-1, ambient)
        return cls(fp.row_basis(V, p), ambient, p)

    @property
    def dim(self):
        return self.rows.shape[0]

    @property
    def codim(self):
        return self.ambient - self.dim

    def contains(self, v):
        return fp.in_span(v, self.rows, self.p)

    def __eq__(self, other):
        return (isinstance(other, SubspaceBasis) and self.ambient == other.ambient and self.p == other.p
                and np.array_equal(self.rows, other.rows))

    def __hash__(self):
        return hash((self.ambient, self.p, self.rows.tobytes()))


def _left_null(blocks, d, p):
    """RREF basis of {v in F_p^d : v @ M = 0 for every M in blocks}."""
    if not blocks:
        return np.eye(d, dtype=np.int64)
    tall = np.vstack([np.asarray(M, dtype=np.int64).reshape(d, -1).T for M in blocks])
    B = fp.row_basis(tall, p)
    if B.shape[0] == 0:
        return np.eye(d, dtype=np.int64)
    N = fp.nullspace(B, p)
    return fp.rref(N, p)[0] if N.shape[0] else N


def _quotient_projection(R, d, p):
    """d x c matrix sending v to the complement coordinates of v mod rowspace(R)."""
    piv = fp.pivots_of(R)
    comp = fp.complement_pivots(R, d)
    P = np.zeros((d, len(comp)), dtype=np.int64)
    for k, c in enumerate(comp):
        P[c, k] = 1
    for r, pc in enumerate(piv):
        P[pc, :] = (-R[r, comp]) % p
    return P, comp


class FqAlgebra:
    """Associative unital algebra over F_p given by structure constants."""

    def __init__(self, p: int, C, one, label: str = "", check: bool = True, seed: int = 0):
        if not is_prime(p):
            raise ValueError("invalid prime")
        C = np.asarray(C, dtype=np.int64) % p
        d = C.shape[0]
        if C.shape != (d, d, d):
            raise ValueError("structure constants must have shape (d, d, d)")
        self.p = p
        self.q = p
        self.F = FiniteField(p)
        self.C = C
        self.one = np.asarray(one, dtype=np.int64) % p
        self.label = label
        self._flat = C.reshape(d, d * d)
        if check:
            self._check_axioms(seed)

    @property
    def dim(self):
        return self.C.shape[0]

    def __repr__(self):
        return f"FqAlgebra(p={self.p}, dim={self.dim}{', ' + self.label if self.label else ''})"

    def basis_vector(self, i):
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def left_matrix(self, a):
        """M with b @ M = a*b."""
        d = self.dim
        return (np.asarray(a, dtype=np.int64) @ self._flat).reshape(d, d) % self.p

    def right_matrix(self, b):
        """M with a @ M = a*b."""
        return np.tensordot(self.C, np.asarray(b, dtype=np.int64), axes=([1], [0])) % self.p

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        nz = np.flatnonzero(a)
        L = np.tensordot(a[nz], self.C[nz], axes=1) % self.p
        return (np.asarray(b, dtype=np.int64) @ L) % self.p

    def pow(self, a, e: int):
        result = self.one.copy()
        base = np.asarray(a, dtype=np.int64) % self.p
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def products(self, U, V):
        """All products u*v for rows u of U, v of V, as a (|U|*|V|) x d array."""
        d = self.dim
        U = np.atleast_2d(U)
        V = np.atleast_2d(V)
        L = (U @ self._flat).reshape(-1, d, d) % self.p  # L[r] = left_matrix(U[r])
        out = np.einsum("sj,rjk->rsk", V, L) % self.p
        return out.reshape(-1, d)

    def _check_axioms(self, seed):
        d, p = self.dim, self.p
        eye = np.eye(d, dtype=np.int64)
        if not (np.array_equal(self.left_matrix(self.one), eye) and np.array_equal(self.right_matrix(self.one), eye)):
            raise ValueError("unit axiom fails")
        if d <= FULL_ASSOC_DIM:
            # (b_i b_j) b_k versus b_i (b_j b_k), all triples
            lhs = np.einsum("ijl,lkm->ijkm", self.C, self.C) % p
            rhs = np.einsum("jkl,ilm->ijkm", self.C, self.C) % p
            ok = np.array_equal(lhs, rhs)
        else:
            rng = np.random.default_rng(seed)
            ok = True
            for _ in range(ASSOC_SAMPLES):
                a, b, c = rng.integers(0, p, size=(3, d))
                if not np.array_equal(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c))):
                    ok = False
                    break
        if not ok:
            raise ValueError("not associative")

    def is_commutative(self):
        return np.array_equal(self.C, self.C.transpose(1, 0, 2))


def quotient_algebra(A: FqAlgebra, I: SubspaceBasis):
    """A/I for a two-sided ideal I; returns (algebra, projection matrix d x c)."""
    P, comp = _quotient_projection(I.rows, A.dim, A.p)
    c = len(comp)
    X = A.C[np.ix_(comp, comp)].reshape(c * c, A.dim)
    Cq = ((X @ P) % A.p).reshape(c, c, c)
    one = (A.one @ P) % A.p
    return FqAlgebra(A.p, Cq, one, label=A.label + "/I", check=False), P


def algebra_from_matrices(p, mats, label=""):
    """Subalgebra of matrices with the given F_p-basis, closed under products."""
    mats = [np.asarray(M, dtype=np.int64) % p for M in mats]
    d = len(mats)
    n = mats[0].shape[0]
    B = np.array([M.reshape(-1) for M in mats])
    R, piv = fp.rref(B, p)
    if R.shape[0] != d:
        raise ValueError("matrices are linearly dependent")
    C = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            prod = (mats[i] @ mats[j] % p).reshape(1, -1)
            C[i, j] = fp.solve_left(B, prod, p)[0]
    one = fp.solve_left(B, np.eye(n, dtype=np.int64).reshape(1, -1), p)[0]
    return FqAlgebra(p, C, one, label)


# -- the residue twisted group ring --------------------------------------------


def build_residue_algebra(R: GaloisNumberRing, p: int, seed: int = 0) -> FqAlgebra:
    """T-bar x| G over F_p with basis sigma*x^j at index sigma*m + j."""
    rd = reduce_ring_mod_p(R, p, seed)
    g, m = R.g, R.m
    G = R.G
    X = _mult_by_x(rd.mubar, p)
    powers = [np.eye(m, dtype=np.int64)]
    for _ in range(1, m):
        powers.append(powers[-1] @ X % p)
    d = g * m
    C = np.zeros((d, d, d), dtype=np.int64)
    for t in range(g):
        At = rd.mats[t]
        # (x^j)^t x^k, rows j, for each k
        blocks = [At @ powers[k] % p for k in range(m)]
        for s in range(g):
            st = G.mul(s, t)
            for k in range(m):
                C[s * m:(s + 1) * m, t * m + k, st * m:(st + 1) * m] = blocks[k]
    one = np.zeros(d, dtype=np.int64)
    one[0] = 1
    A = FqAlgebra(p, C, one, label=f"residue ring mod {p}", seed=seed)
    A.residue = rd
    A.ring = R
    return A


def _mult_by_x(mod: Poly, p: int):
    """Matrix of multiplication by x on F_p[x]/(mod), row convention."""
    n = mod.degree
    M = np.zeros((n, n), dtype=np.int64)
    for j in range(n - 1):
        M[j, j + 1] = 1
    if n:
        M[n - 1, :] = [(-mod[k]) % p for k in range(n)]
    return M


# -- Kulshammer spaces and the radical ------------------------------------------


def commutator_space(A: FqAlgebra) -> SubspaceBasis:
    d = A.dim
    D = (A.C - A.C.transpose(1, 0, 2)) % A.p
    return SubspaceBasis.span(D.reshape(d * d, d), d, A.p)


def kulshammer_spaces(A: FqAlgebra):
    """(bLC, bLCP, dim A/bLCP): commutators and the stabilized p-power preimage of them."""
    p, d = A.p, A.dim
    LC = commutator_space(A)
    P, comp = _quotient_projection(LC.rows, d, p)
    c = len(comp)
    if c == 0:
        return LC, LC, 0
    # x -> x^p is F_p-linear on A / [A, A]; its matrix on the complement coordinates
    Phi = np.array([A.pow(A.basis_vector(j), p) @ P % p for j in comp], dtype=np.int64).reshape(c, c)
    ker = np.zeros((0, c), dtype=np.int64)
    Pk = np.eye(c, dtype=np.int64)
    for _ in range(c + 1):
        Pk = Pk @ Phi % p
        new = fp.left_kernel(Pk, p)
        if new.shape[0] == ker.shape[0]:
            break
        ker = new
    lifted = np.zeros((ker.shape[0], d), dtype=np.int64)
    lifted[:, comp] = ker
    LCP = SubspaceBasis.span(np.vstack([LC.rows, lifted]), d, p)
    return LC, LCP, d - LCP.dim


def jacobson_radical(A: FqAlgebra, seed: int = 0, verify: bool = True) -> SubspaceBasis:
    """Jac(A) = {a : aA lies in the p-power preimage of [A, A]}.

    ``seed`` is accepted for interface uniformity; the computation is
    deterministic.
    """
    p, d = A.p, A.dim
    _, LCP, _ = kulshammer_spaces(A)
    P, comp = _quotient_projection(LCP.rows, d, p)
    if not comp:
        rows = np.eye(d, dtype=np.int64)
    else:
        # a @ right_matrix(b_j) @ P = 0 for every j
        blocks = [A.C[:, j, :] @ P % p for j in range(d)]
        rows = _left_null(blocks, d, p)
    J = SubspaceBasis(rows, d, p)
    if verify:
        check_nilpotent_ideal(A, J)
    return J


def is_ideal(A: FqAlgebra, I: SubspaceBasis) -> bool:
    if I.dim == 0:
        return True
    basis = np.eye(A.dim, dtype=np.int64)
    left = A.products(basis, I.rows)
    right = A.products(I.rows, basis)
    return fp.in_span(np.vstack([left, right]), I.rows, A.p)


def ideal_powers(A: FqAlgebra, I: SubspaceBasis):
    """Dimensions of I, I^2, ... down to 0 (or to a stable nonzero power)."""
    dims = [I.dim]
    cur = I
    while cur.dim:
        nxt = SubspaceBasis.span(A.products(cur.rows, I.rows), A.dim, A.p)
        dims.append(nxt.dim)
        if nxt.dim == cur.dim:
            break
        cur = nxt
    return dims


def check_nilpotent_ideal(A: FqAlgebra, I: SubspaceBasis):
    if not is_ideal(A, I):
        raise AssertionError("radical is not a two-sided ideal")
    if ideal_powers(A, I)[-1] != 0:
        raise AssertionError("radical is not nilpotent")


def center(A: FqAlgebra) -> SubspaceBasis:
    d = A.dim
    blocks = [(A.C[i] - A.C[:, i, :]) % A.p for i in range(d)]
    return SubspaceBasis(_left_null(blocks, d, A.p), d, A.p)


def semisimple_quotient(A: FqAlgebra, seed: int = 0):
    J = jacobson_radical(A, seed)
    if J.dim == 0:
        return A, J
    Q, _ = quotient_algebra(A, J)
    return Q, J


# -- blocks ---------------------------------------------------------------------


@dataclass
class BlockReport:
    dimension: int
    center_degree: int
    matrix_size: int
    simple_dim: int
    p: int
    idempotent: np.ndarray = field(repr=False, compare=False)

    @property
    def endo_field(self):
        return f"F_{self.p}" if self.center_degree == 1 else f"F_{self.p}^{self.center_degree}"

    @property
    def endo_order(self):
        return self.p ** self.center_degree

    @property
    def split(self):
        return self.center_degree == 1

    def as_dict(self):
        return {"dimension": self.dimension, "center_degree": self.center_degree, "matrix_size": self.matrix_size,
                "simple_dim": self.simple_dim, "endo_field": self.endo_field, "split": self.split}


def frobenius_fixed_center(A: FqAlgebra, Z: SubspaceBasis | None = None):
    """Rows spanning {z in Z(A) : z^p = z}."""
    p = A.p
    Z = center(A) if Z is None else Z
    piv = fp.pivots_of(Z.rows)
    Phi = np.array([fp.coords(A.pow(z, p), Z.rows, p, piv)[0] for z in Z.rows], dtype=np.int64).reshape(Z.dim, Z.dim)
    K = fp.left_kernel((Phi - np.eye(Z.dim, dtype=np.int64)) % p, p)
    return (K @ Z.rows) % p if K.shape[0] else np.zeros((0, A.dim), dtype=np.int64)


def _min_poly(A: FqAlgebra, x, e):
    """Minimal polynomial of x inside eAe (e the unit there), as a Poly over F_p."""
    p = A.p
    powers = [e % p]
    while True:
        nxt = A.mul(powers[-1], x)
        M = np.array(powers)
        try:
            c = fp.solve_left(M, nxt, p)[0]
        except ValueError:
            powers.append(nxt)
            continue
        F = FiniteField(p)
        return Poly([(-int(v)) % p for v in c] + [1], F)


def central_idempotents(A: FqAlgebra, seed: int = 0, Z: SubspaceBasis | None = None):
    """Central primitive idempotents of a semisimple algebra, by seeded splitting."""
    p = A.p
    fixed = frobenius_fixed_center(A, Z)
    k = fixed.shape[0]
    rng = random.Random(seed)
    done = []
    todo = [A.one % p]
    while todo:
        e = todo.pop()
        eF = SubspaceBasis.span(A.products(fixed, e.reshape(1, -1)), A.dim, p)
        if eF.dim <= 1:
            done.append(e)
            continue
        while True:
            coeffs = [rng.randrange(p) for _ in range(eF.dim)]
            x = np.array(coeffs, dtype=np.int64) @ eF.rows % p
            if fp.rank(np.vstack([e, x]), p) == 2:
                break
        mp = _min_poly(A, x, e)
        roots = [int(f[0] and (-f[0]) % p) for f, _ in factor_poly_fq(mp, seed=rng.randrange(1 << 30))]
        for lam in roots:
            idem = e.copy()
            for mu in roots:
                if mu == lam:
                    continue
                inv = pow((lam - mu) % p, -1, p)
                idem = A.mul(idem, (x - mu * e) * inv % p)
            todo.append(idem % p)
    if len(done) != k:
        raise AssertionError("block count mismatch")
    return done


def block_decompose(A: FqAlgebra, seed: int = 0, check_radical: bool = True):
    p = A.p
    if check_radical and jacobson_radical(A, seed, verify=False).dim:
        raise ValueError("radical nonzero")
    Z = center(A)
    blocks = []
    for e in central_idempotents(A, seed, Z):
        dim = fp.rank(A.products(np.eye(A.dim, dtype=np.int64), e.reshape(1, -1)), p)
        c = fp.rank(A.products(Z.rows, e.reshape(1, -1)), p)
        x = isqrt(dim // c)
        if x * x * c != dim:
            raise AssertionError("block is not a full matrix algebra")
        blocks.append(BlockReport(dim, c, x, x * c, p, e))
    total = sum(b.dimension for b in blocks)
    if total != A.dim:
        raise AssertionError("block dimensions do not add up")
    blocks.sort(key=lambda b: (b.simple_dim, b.center_degree, tuple(b.idempotent)))
    return blocks


# -- V_sigma and the count z ----------------------------------------------------


def _t0_products(rd, p):
    """Multiplication-by-basis matrices on T0 = F_p[x]/(rad)."""
    X = _mult_by_x(rd.rad, p)
    out = [np.eye(rd.dim0, dtype=np.int64)]
    for _ in range(1, rd.dim0):
        out.append(out[-1] @ X % p)
    return out


def v_sigma(R: GaloisNumberRing, p: int, sigma: int, rd=None, seed: int = 0):
    """(V_sigma as SubspaceBasis of T0, codimension)."""
    rd = reduce_ring_mod_p(R, p, seed) if rd is None else rd
    G = R.G
    m0 = rd.dim0
    I = np.eye(m0, dtype=np.int64)
    mult = _t0_products(rd, p)
    diff = (rd.mats0[sigma] - I) % p  # row a: (x^a)^sigma - x^a
    vecs = [diff @ M % p for M in mult]
    cent = G.centralizer(sigma)
    for rho in G.subgroup_generators(cent):
        vecs.append((rd.mats0[rho] - I) % p)
    V = SubspaceBasis.span(np.vstack(vecs) if vecs else np.zeros((0, m0)), m0, p)
    return V, V.codim


def brauer_z(R: GaloisNumberRing, p: int, rd=None, seed: int = 0, detail: bool = False):
    rd = reduce_ring_mod_p(R, p, seed) if rd is None else rd
    parts = {}
    for sigma in p_prime_class_reps(R.G, p):
        parts[sigma] = v_sigma(R, p, sigma, rd)[1]
    z = sum(parts.values())
    return (z, parts) if detail else z


# -- modules --------------------------------------------------------------------


class FqModule:
    """Right module over an FqAlgebra: v . b_k = v @ mats[k]."""

    def __init__(self, algebra: FqAlgebra | None, mats, p: int, gens=None, check: bool = True):
        self.algebra = algebra
        self.p = p
        self.mats = [np.asarray(M, dtype=np.int64) % p for M in mats]
        self.dim = self.mats[0].shape[0] if self.mats else 0
        self.gens = list(range(len(self.mats))) if gens is None else list(gens)
        if check and algebra is not None:
            self._check()

    def _check(self):
        A, p = self.algebra, self.p
        if len(self.mats) != A.dim:
            raise ValueError("need one matrix per algebra basis element")
        M = np.array(self.mats)
        if not np.array_equal(np.tensordot(A.one, M, axes=(0, 0)) % p, np.eye(self.dim, dtype=np.int64)):
            raise ValueError("action is not unital")
        lhs = np.einsum("iab,jbc->ijac", M, M) % p
        rhs = np.tensordot(A.C, M, axes=(2, 0)) % p
        if not np.array_equal(lhs, rhs):
            raise ValueError("action is not multiplicative")

    def spin(self, v):
        """RREF basis of the submodule generated by v."""
        p = self.p
        basis = fp.rref(np.atleast_2d(v), p)[0]
        frontier = list(basis)
        while frontier:
            w = frontier.pop()
            imgs = np.array([w @ self.mats[k] % p for k in self.gens])
            red = fp.reduce_rows(imgs, basis, p)
            red = red[np.any(red, axis=1)]
            if red.shape[0]:
                new = fp.rref(np.vstack([basis, red]), p)[0]
                if new.shape[0] > basis.shape[0]:
                    fresh = fp.reduce_rows(red, basis, p)
                    frontier.extend(fp.rref(fresh, p)[0])
                    basis = new
            if basis.shape[0] == self.dim:
                break
        return basis


def projective_points(n, p):
    """Normalized representatives (first nonzero entry 1) of the points of P^{n-1}(F_p)."""
    for lead in range(n):
        tail = n - lead - 1
        for code in range(p ** tail):
            v = np.zeros(n, dtype=np.int64)
            v[lead] = 1
            for k in range(tail):
                v[lead + 1 + k] = (code // p ** k) % p
            yield v


def is_simple(M: FqModule, bound: int = SPIN_BOUND) -> bool:
    if M.dim == 0:
        return False
    if M.p ** M.dim > bound:
        raise ValueError("module too large for exhaustive check")
    for v in projective_points(M.dim, M.p):
        if M.spin(v).shape[0] < M.dim:
            return False
    return True


def principal_residue_module(A: FqAlgebra) -> FqModule:
    """T0 as a right module over the residue twisted group ring: y . (sigma x^j) = y^sigma x^j."""
    R, rd, p = A.ring, A.residue, A.p
    X0 = _mult_by_x(rd.rad, p)
    xp = [np.eye(rd.dim0, dtype=np.int64)]
    for _ in range(1, R.m):
        xp.append(xp[-1] @ X0 % p)
    mats = [rd.mats0[s] @ xp[j] % p for s in range(R.g) for j in range(R.m)]
    return FqModule(A, mats, p, gens=_generator_indices(R))


def _generator_indices(R):
    gens = R.G.subgroup_generators(list(range(R.g)))
    idx = [s * R.m for s in gens]
    if R.m > 1:
        idx.append(1)
    return idx


def module_from_block(A: FqAlgebra, block) -> FqModule:
    """Reduction mod p of an integral block representation (a lattice)."""
    R, p = A.ring, A.p
    K = block.K
    if K.c != 1 or K.d != 1:
        raise ValueError("block field differs from K")

    def red(Mq):
        out = np.zeros((len(Mq), len(Mq)), dtype=np.int64)
        for a, row in enumerate(Mq):
            for b, entry in enumerate(row):
                c = entry[0]
                if valuation(c, p) < 0:
                    raise ValueError("not a lattice")
                out[a, b] = c.numerator * pow(c.denominator, -1, p) % p
        return out

    gmats = [red(block.images[s]) for s in range(R.g)]
    Gam = red(block.gamma)
    gp = [np.eye(block.x, dtype=np.int64)]
    for _ in range(1, R.m):
        gp.append(gp[-1] @ Gam % p)
    mats = [gmats[s] @ gp[j] % p for s in range(R.g) for j in range(R.m)]
    return FqModule(A, mats, p, gens=_generator_indices(R))


def brauer_nesbitt_check(R: GaloisNumberRing, p: int, block, t: int | None = None, A: FqAlgebra | None = None):
    """Hypothesis v(x) = v(g) + t, the bound v(x) + v(d) <= v(g) + t, and simplicity of the reduction."""
    if t is None:
        t = local_data(R, p).t
    A = build_residue_algebra(R, p) if A is None else A
    M = module_from_block(A, block)  # raises "not a lattice" early
    vx, vd, vg = valuation(block.x, p), valuation(block.d, p), valuation(R.g, p)
    out = {"v_x": vx, "v_g": vg, "t": t, "bound": vx + vd <= vg + t, "hypothesis": vx == vg + t}
    if out["hypothesis"]:
        out["simple"] = is_simple(M)
        out["status"] = "verified" if out["simple"] else "failed"
    else:
        out["simple"] = None
        out["status"] = "hypothesis not met"
    return out


# -- predictions and side lemmas ------------------------------------------------


def semisimplicity_predict(R: GaloisNumberRing, p: int, seed: int = 0, A: FqAlgebra | None = None):
    """(predicted, observed): e = 1 and p not dividing n, versus Jac = 0."""
    ld = local_data(R, p, seed)
    predicted = ld.e == 1 and R.n % p != 0
    A = build_residue_algebra(R, p, seed) if A is None else A
    observed = jacobson_radical(A, seed).dim == 0
    return predicted, observed


def jac_T_ideal(A: FqAlgebra) -> SubspaceBasis:
    """Jac(T-bar) times the residue twisted group ring."""
    R, rd, p = A.ring, A.residue, A.p
    m, m0 = R.m, rd.dim0
    x = Poly.x(rd.F)
    rows = []
    for s in range(R.g):
        for k in range(m - m0):
            f = (x ** k * rd.rad) % rd.mubar
            v = np.zeros(A.dim, dtype=np.int64)
            v[s * m:(s + 1) * m] = [f[j] for j in range(m)]
            rows.append(v)
    return SubspaceBasis.span(np.array(rows) if rows else np.zeros((0, A.dim)), A.dim, p)


def norm_surjectivity(q: int, f: int, alpha_exp: int, mu_exp: int) -> bool:
    """Surjectivity of y -> prod_{l < q^mu} y^(alpha^l) on F_{q^f}, alpha = Frobenius^alpha_exp."""
    p, a = _prime_power(q)
    order = f // gcd(f, alpha_exp % f)
    if order % p == 0:
        raise ValueError("hypothesis violated")
    F = FiniteField(p, a * f)
    Q = F.q
    step = q ** (alpha_exp % f)
    E = sum(pow(step, l, Q - 1) for l in range(q ** mu_exp)) % (Q - 1)
    image = {F.pow(y, E) if y else 0 for y in range(Q)}
    return len(image) == Q


def _prime_power(q):
    for r in range(2, q + 1):
        if q % r == 0:
            k, a = q, 0
            while k % r == 0:
                k //= r
                a += 1
            if k != 1:
                raise ValueError("q is not a prime power")
            return r, a
    raise ValueError("q is not a prime power")
