"""Exact checks of the rational Wedderburn identities of L x G.

Block data are input: for each block i a coefficient algebra K_i (a number
field or a rational quaternion algebra), a size x_i and matrices over K_i for
the group generators and for the generator g of L.  Every identity is an
exact equality of rationals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .exact.fields import is_p_integral, rational_str, valuation
from .exact.linalg import inverse, solve_left
from .numberring import NumberField
from .twisted import (TwistedElement, TwistedRing, center_basis, center_coordinates, central_gram, epsilon1,
                      form, principal_rep)


# -- coefficient algebras ------------------------------------------------------

class FieldAlgebra:
    """A number field K_i = Q[X]/(mu) used as a block coefficient ring."""

    kind = "field"

    def __init__(self, mu):
        self.F = NumberField(mu)
        self.dim = self.F.m
        self.c = self.F.m
        self.d = 1
        self.zero = self.F.zero
        self.one = self.F.one

    @property
    def r(self):
        return self.c * self.d * self.d

    def __eq__(self, other):
        return isinstance(other, FieldAlgebra) and self.F == other.F

    def __hash__(self):
        return hash(self.F)

    def describe(self):
        return "Q" if self.dim == 1 else f"Q[X]/({self.F.mu_poly!r})"

    def spec(self):
        if self.dim == 1:
            return "Q"
        return "field " + " ".join(rational_str(c) for c in self.F.mu)

    def convert(self, w):
        if isinstance(w, tuple) and len(w) == self.dim:
            return tuple(Fraction(c) for c in w)
        if isinstance(w, (list, tuple)):
            return self.F.convert([Fraction(c) for c in w])
        return self.F.convert(Fraction(w))

    def add(self, a, b):
        return self.F.add(a, b)

    def sub(self, a, b):
        return self.F.sub(a, b)

    def neg(self, a):
        return self.F.neg(a)

    def mul(self, a, b):
        return self.F.mul(a, b)

    def scale(self, c, a):
        return self.F.scale(c, a)

    def is_zero(self, a):
        return not any(a)

    def reduced_trace(self, w) -> Fraction:
        return self.F.trace(w)

    def is_central(self, w):
        return True

    def center_trace(self, w) -> Fraction:
        return self.F.trace(w)

    def to_json(self, w):
        return rational_str(w[0]) if self.dim == 1 else [rational_str(c) for c in w]


class QuaternionAlgebra:
    """(a, b)_Q with basis 1, I, J, IJ; I^2 = a, J^2 = b, IJ = -JI."""

    kind = "quaternion"

    def __init__(self, a, b, d: int = 2):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.dim = 4
        self.c = 1
        self.d = d
        self.zero = (Fraction(0),) * 4
        self.one = (Fraction(1),) + (Fraction(0),) * 3

    @property
    def r(self):
        return 4

    def __eq__(self, other):
        return isinstance(other, QuaternionAlgebra) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def describe(self):
        return f"quaternion({rational_str(self.a)}, {rational_str(self.b)})"

    def spec(self):
        return f"quaternion {rational_str(self.a)} {rational_str(self.b)}"

    def convert(self, w):
        if isinstance(w, (list, tuple)):
            w = [Fraction(c) for c in w] + [Fraction(0)] * (4 - len(w))
            return tuple(w)
        return (Fraction(w),) + (Fraction(0),) * 3

    def add(self, x, y):
        return tuple(p + q for p, q in zip(x, y))

    def sub(self, x, y):
        return tuple(p - q for p, q in zip(x, y))

    def neg(self, x):
        return tuple(-p for p in x)

    def scale(self, c, x):
        c = Fraction(c)
        return tuple(c * p for p in x)

    def mul(self, x, y):
        a, b = self.a, self.b
        x0, x1, x2, x3 = x
        y0, y1, y2, y3 = y
        return (
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        )

    def is_zero(self, x):
        return not any(x)

    def reduced_trace(self, w) -> Fraction:
        return 2 * w[0]

    def is_central(self, w):
        return not any(w[1:])

    def center_trace(self, w) -> Fraction:
        return w[0]

    def to_json(self, w):
        return [rational_str(c) for c in w]


QQ_ALGEBRA = FieldAlgebra([0, 1])


def reduced_trace(K, w) -> Fraction:
    return K.reduced_trace(K.convert(w))


# -- matrices over a coefficient algebra --------------------------------------

def mzero(K, n):
    return [[K.zero] * n for _ in range(n)]


def meye(K, n):
    return [[K.one if i == j else K.zero for j in range(n)] for i in range(n)]


def mmul(K, A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = [[K.zero] * m for _ in range(n)]
    for i in range(n):
        for j in range(k):
            a = A[i][j]
            if K.is_zero(a):
                continue
            row = B[j]
            for c in range(m):
                if not K.is_zero(row[c]):
                    out[i][c] = K.add(out[i][c], K.mul(a, row[c]))
    return out


def madd(K, A, B):
    return [[K.add(a, b) for a, b in zip(r, s)] for r, s in zip(A, B)]


def mscale(K, c, A):
    return [[K.scale(c, a) for a in r] for r in A]


def mtrace(K, A):
    acc = K.zero
    for i in range(len(A)):
        acc = K.add(acc, A[i][i])
    return acc


def mpoly(K, coeffs, A):
    """sum_k c_k A^k for rational c_k."""
    n = len(A)
    out = mzero(K, n)
    P = meye(K, n)
    for k, c in enumerate(coeffs):
        if k:
            P = mmul(K, P, A)
        if c:
            out = madd(K, out, mscale(K, c, P))
    return out


# -- block representations -----------------------------------------------------

@dataclass
class BlockRepresentation:
    index: int
    K: object
    x: int
    images: list  # matrix of each flat basis element s*g^j
    group_mats: dict = field(default_factory=dict)
    gamma: list | None = None

    @property
    def c(self):
        return self.K.c

    @property
    def d(self):
        return self.K.d

    @property
    def r(self):
        return self.K.r


def block_from_generators(T: TwistedRing, K, x: int, group_mats: dict, gamma, index: int = 0) -> BlockRepresentation:
    """Extend generator images to all gh basis elements, checking the defining relations."""
    G, R = T.G, T.R
    group_mats = {s: [[K.convert(w) for w in r] for r in A] for s, A in group_mats.items()}
    gamma = [[K.convert(w) for w in r] for r in gamma]
    for A in list(group_mats.values()) + [gamma]:
        if len(A) != x or any(len(r) != x for r in A):
            raise ValueError("inconsistent representation data")
    # mu(gamma) = 0
    if any(not K.is_zero(w) for r in mpoly(K, T.L.mu, gamma) for w in r):
        raise ValueError("inconsistent representation data")
    mats = {0: meye(K, x)}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for s, A in group_mats.items():
                b = G.mul(a, s)
                P = mmul(K, mats[a], A)
                if b in mats:
                    if mats[b] != P:
                        raise ValueError("inconsistent representation data")
                else:
                    mats[b] = P
                    nxt.append(b)
        frontier = nxt
    if len(mats) != G.order:
        raise ValueError("inconsistent representation data")
    # y s = s y^s on y = g
    for s, A in group_mats.items():
        lhs = mmul(K, gamma, A)
        rhs = mmul(K, A, mpoly(K, R.action[s], gamma))
        if lhs != rhs:
            raise ValueError("inconsistent representation data")
    pows = [meye(K, x)]
    for _ in range(1, T.m):
        pows.append(mmul(K, pows[-1], gamma))
    images = [mmul(K, mats[s], pows[j]) for s in range(G.order) for j in range(T.m)]
    return BlockRepresentation(index, K, x, images, group_mats, gamma)


def principal_block(T: TwistedRing, gens=None) -> BlockRepresentation:
    if not T.R.K_is_Q:
        raise ValueError("fixed field is larger than Q")
    K = QQ_ALGEBRA
    gens = T.G.subgroup_generators(range(T.g)) if gens is None else gens
    conv = lambda M: [[(c,) for c in r] for r in M]
    group_mats = {s: conv(principal_rep(T, T.group_element(s))) for s in gens}
    gamma = conv(principal_rep(T, T.scalar(T.L.gen)))
    return block_from_generators(T, K, T.R.h, group_mats, gamma, index=1)


class WedderburnData:
    """Blocks 1..k with block 1 the principal module."""

    def __init__(self, T: TwistedRing, blocks):
        self.T = T
        self.blocks = list(blocks)
        for i, b in enumerate(self.blocks, 1):
            b.index = i
        self.g = T.g
        self.h = T.R.h
        self.n = T.R.n

    @property
    def k(self):
        return len(self.blocks)

    def is_complete(self):
        return sum(b.r * b.x * b.x for b in self.blocks) == self.g * self.h

    def require_complete(self):
        if not self.is_complete():
            raise ValueError("missing blocks")

    @cached_property
    def dual_basis(self):
        """y*_l with Tr(y_l y*_m) = delta, for the power basis y_l = g^l."""
        Ginv = inverse(self.T.L.trace_gram)
        return [tuple(r) for r in Ginv]

    def omega(self, i: int, xi: TwistedElement):
        b = self.blocks[i - 1]
        K = b.K
        out = mzero(K, b.x)
        for k, c in enumerate(xi.vector()):
            if c:
                out = madd(K, out, mscale(K, c, b.images[k]))
        return out

    def omega_all(self, xi):
        return tuple(self.omega(i, xi) for i in range(1, self.k + 1))

    def character(self, i: int, xi: TwistedElement) -> Fraction:
        b = self.blocks[i - 1]
        return b.K.reduced_trace(mtrace(b.K, self.omega(i, xi)))

    @cached_property
    def dual_terms(self):
        """y*_l s^-1 for every (s, l), as ring elements, in flat order."""
        T = self.T
        return [T.left_coefficient(self.dual_basis[l], T.G.inv(s)) for s in range(self.g) for l in range(T.m)]

    @cached_property
    def dual_images(self):
        return [[self.omega(i, e) for e in self.dual_terms] for i in range(1, self.k + 1)]


def plancherel_check(W: WedderburnData, xi, eta):
    W.require_complete()
    lhs = form(W.T, xi, eta)
    rhs = Fraction(0)
    for i, b in enumerate(W.blocks, 1):
        P = mmul(b.K, W.omega(i, xi), W.omega(i, eta))
        rhs += Fraction(b.x * b.d, W.g) * b.K.reduced_trace(mtrace(b.K, P))
    return lhs, rhs, lhs == rhs


def fourier_invert(W: WedderburnData, phi) -> TwistedElement:
    """Inverse Wedderburn map on a tuple of block matrices."""
    W.require_complete()
    T = W.T
    m = T.m
    phi = [[[b.K.convert(w) for w in r] for r in M] for b, M in zip(W.blocks, phi)]
    coeffs = []
    for k in range(T.dim):
        acc = Fraction(0)
        for i, b in enumerate(W.blocks):
            P = mmul(b.K, W.dual_images[i][k], phi[i])
            acc += Fraction(b.x * b.d, W.h) * b.K.reduced_trace(mtrace(b.K, P))
        coeffs.append(acc / W.n)
    return T.from_vector(coeffs)


def schur_sum(W: WedderburnData, i, a, b, i2, a2, b2):
    """sum over s, l of omega_{i;a,b}(s y_l) tr(omega_{i';b',a'}(y*_l s^-1)); an element of K_i."""
    for (ii, aa, bb) in ((i, a, b), (i2, a2, b2)):
        if not 1 <= ii <= W.k or not (0 <= aa < W.blocks[ii - 1].x and 0 <= bb < W.blocks[ii - 1].x):
            raise IndexError("index out of range")
    B, B2 = W.blocks[i - 1], W.blocks[i2 - 1]
    K = B.K
    acc = K.zero
    for k in range(W.T.dim):
        t = B2.K.reduced_trace(W.dual_images[i2 - 1][k][b2][a2])
        if t:
            acc = K.add(acc, K.scale(t, B.images[k][a][b]))
    return acc


def schur_expected(W, i, a, b, i2, a2, b2):
    B = W.blocks[i - 1]
    if (i, a, b) == (i2, a2, b2):
        return B.K.convert(Fraction(W.g, B.x * B.d))
    return B.K.zero


def orthogonality_sum(W: WedderburnData, i, i2) -> Fraction:
    if not (1 <= i <= W.k and 1 <= i2 <= W.k):
        raise IndexError("index out of range")
    B, B2 = W.blocks[i - 1], W.blocks[i2 - 1]
    acc = Fraction(0)
    for k in range(W.T.dim):
        acc += B.K.reduced_trace(mtrace(B.K, B.images[k])) * B2.K.reduced_trace(mtrace(B2.K, W.dual_images[i2 - 1][k]))
    return acc


def character_support_check(W: WedderburnData) -> bool:
    T = W.T
    N = set(T.R.kernel)
    for s in range(T.g):
        for l in range(T.m):
            xi = T.basis_element(s * T.m + l)
            for i in range(1, W.k + 1):
                v = W.character(i, xi)
                if s not in N and v != 0:
                    return False
            expected = T.L.trace(T.L.basis_vector(l)) if s in N else 0
            if W.character(1, xi) != expected:
                return False
    return True


def central_idempotents(W: WedderburnData, verify: bool = True):
    """eps_i = (x_i d_i / g) sum s y*_l chi_i(y_l s^-1)."""
    W.require_complete()
    T = W.T
    out = []
    for i, b in enumerate(W.blocks, 1):
        acc = T.zero()
        for s in range(T.g):
            sinv = T.G.inv(s)
            for l in range(T.m):
                chi = W.character(i, T.left_coefficient(T.L.basis_vector(l), sinv))
                if chi:
                    acc = acc + T.element({s: W.dual_basis[l]}).scale(chi)
        out.append(acc.scale(Fraction(b.x * b.d, T.g)))
    if verify:
        _verify_idempotents(W, out)
    return out


def _verify_idempotents(W, eps):
    T = W.T
    total = T.zero()
    for i, e in enumerate(eps):
        total = total + e
        if not T.is_central(e):
            raise ValueError("inconsistent representation data")
        for j, f in enumerate(eps):
            prod = e * f
            if prod != (e if i == j else T.zero()):
                raise ValueError("inconsistent representation data")
        for j, b in enumerate(W.blocks):
            want = meye(b.K, b.x) if i == j else mzero(b.K, b.x)
            if W.omega(j + 1, e) != want:
                raise ValueError("inconsistent representation data")
    if total != T.one():
        raise ValueError("inconsistent representation data")


def idempotent_integrality(W: WedderburnData, eps, p: int, s: int) -> bool:
    """Is n p^s eps_i p-integral (coefficients in Z_(p)[g]) for each i?"""
    scale = W.n * Fraction(p) ** s
    return all(is_p_integral(c * scale, p) for e in eps for c in e.vector())


def noether_invert(T: TwistedRing, phi) -> TwistedElement:
    """sum_{l,m} phi_{lm} y*_l ((1/n) sum_s s) y_m, with y_l the power basis."""
    L, R = T.L, T.R
    Ginv = inverse(L.trace_gram)
    dual = [tuple(r) for r in Ginv]
    coeffs = [L.zero] * T.g
    for l in range(T.m):
        for mm in range(T.m):
            c = Fraction(phi[l][mm])
            if not c:
                continue
            ym = L.basis_vector(mm)
            for s in range(T.g):
                term = L.mul(R.act(dual[l], s), ym)
                coeffs[s] = L.add(coeffs[s], L.scale(c / R.n, term))
    return TwistedElement(T, coeffs)


def central_plancherel_check(W: WedderburnData, xi, xi2):
    W.require_complete()
    T = W.T
    if not (T.is_central(xi) and T.is_central(xi2)):
        raise ValueError("not central")
    CB = center_basis(T)
    Gm = central_gram(T, CB)
    a = center_coordinates(T, CB, xi)
    b = center_coordinates(T, CB, xi2)
    lhs = sum((a[i] * Gm[i][j] * b[j] for i in range(len(a)) for j in range(len(b))), Fraction(0))
    rhs = Fraction(0)
    for i, B in enumerate(W.blocks, 1):
        z1, z2 = _scalar_of(B, W.omega(i, xi)), _scalar_of(B, W.omega(i, xi2))
        w = B.K.mul(z1, z2)
        rhs += Fraction(1, W.n) * Fraction(B.x * B.d, W.h) ** 2 * B.K.center_trace(w)
    scaling_ok = W.h * lhs == form(T, xi, xi2)
    return lhs, rhs, lhs == rhs and scaling_ok


def _scalar_of(B, M):
    z = M[0][0]
    if M != [[z if i == j else B.K.zero for j in range(B.x)] for i in range(B.x)] or not B.K.is_central(z):
        raise ValueError("not central")
    return z


def dimension_audits(W: WedderburnData, primes=()) -> dict:
    T = W.T
    R = T.R
    from .twisted import center_dimension_untwisted

    gh = T.g * R.h
    block_sum = sum(b.r * b.x * b.x for b in W.blocks)
    classes = center_dimension_untwisted(T)
    center_sum = sum(b.c for b in W.blocks)
    out = {
        "gh": gh,
        "block_dims": [b.r * b.x * b.x for b in W.blocks],
        "center_dims": [b.c for b in W.blocks],
        "classes_of_N": classes,
        "morita_dim": R.h * R.h * R.n,
    }
    checks = {
        "gh equals sum of block dimensions": gh == block_sum,
        "center dimensions sum to classes of N": center_sum == classes,
        "Morita size": gh == R.h * R.h * R.n,
        "x d / h integral": all((b.x * b.d) % R.h == 0 for b in W.blocks),
    }
    for p in primes:
        if R.n % p:
            checks[f"x d / h prime to {p}"] = all(((b.x * b.d) // R.h) % p != 0 for b in W.blocks if (b.x * b.d) % R.h == 0)
    out["checks"] = checks
    for name, ok in checks.items():
        if not ok:
            raise AssertionError(f"audit failed: {name}")
    return out


# -- modules from idempotents ---------------------------------------------------

def representation_from_idempotent(T: TwistedRing, e: TwistedElement, D_basis, K, index: int = 0, gens=None) -> BlockRepresentation:
    """Block matrices of the right ideal eA over D = eAe, with D_basis[k] matching K's k-th basis vector.

    X = eA is a left D-vector space; for a chosen D-basis v_a of X,
    v_a xi = sum_b phi_ab v_b with phi_ab in D.
    """
    B = T.basis()
    D_basis = list(D_basis)
    if len(D_basis) != K.dim:
        raise ValueError("inconsistent representation data")
    # D_basis must multiply like K's basis
    kb = [K.convert(tuple(Fraction(int(i == j)) for i in range(K.dim))) for j in range(K.dim)]
    Dvecs = [d.vector() for d in D_basis]
    for p_, dp in enumerate(D_basis):
        for q_, dq in enumerate(D_basis):
            prod = K.mul(kb[p_], kb[q_])
            want = T.zero()
            for c, dd in zip(prod, D_basis):
                if c:
                    want = want + dd.scale(c)
            if dp * dq != want:
                raise ValueError("D basis does not match the coefficient algebra")
    # greedy left D-basis of eA
    X = [e * b for b in B]
    chosen, span = [], []
    from .exact.linalg import rank, rref

    for v in X:
        if v.is_zero():
            continue
        if span and rank(span + [v.vector()]) == len(span):
            continue
        chosen.append(v)
        span = rref(span + [(d * v).vector() for d in D_basis])[0]
    x = len(chosen)
    gen_rows = [(d * v).vector() for v in chosen for d in D_basis]

    def matrix_of(xi):
        M = []
        for v in chosen:
            c = solve_left(gen_rows, (v * xi).vector())
            row = []
            for bidx in range(x):
                row.append(K.convert(tuple(c[bidx * K.dim:(bidx + 1) * K.dim])))
            M.append(row)
        return M

    gens = T.G.subgroup_generators(range(T.g)) if gens is None else gens
    group_mats = {s: matrix_of(T.group_element(s)) for s in gens}
    gamma = matrix_of(T.scalar(T.L.gen))
    return block_from_generators(T, K, x, group_mats, gamma, index=index)
