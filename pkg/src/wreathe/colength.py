"""Colengths of the Wedderburn embedding and of its restriction to centers.

Every quantity is an S-length over S = Z_(p) (K = Q only).  Formula values
are computed from block invariants; oracle values from Smith valuations of
explicit lattice bases.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact.fields import valuation
from .exact.linalg import inverse, matmul, transpose
from .exact.smith import INF, colength_of_rows, smith_valuations
from .numberring import GaloisNumberRing, dedekind_pmaximal, fixed_subring_basis, local_data
from .twisted import TwistedRing, bilinear_gram, nu_classes, principal_rep
from .wedderburn import WedderburnData, fourier_invert, mzero


@dataclass(frozen=True)
class BlockInvariants:
    x: int
    d: int
    r: int
    c: int
    delta_S: int
    delta_Z: int

    def __post_init__(self):
        if self.r != self.c * self.d * self.d:
            raise ValueError("inconsistent invariants")
        if self.delta_S < 0 or self.delta_Z < 0 or self.x < 1:
            raise ValueError("inconsistent invariants")

    @classmethod
    def from_block(cls, block, p: int, delta_S=None, delta_Z=None):
        """Invariants of a block; field blocks get their deltas from a p-maximal power basis."""
        K = block.K
        if delta_S is None or delta_Z is None:
            if K.kind != "field":
                raise ValueError("block invariants must be supplied")
            dl = field_delta(K.F.mu, p)
            delta_S = dl if delta_S is None else delta_S
            delta_Z = dl if delta_Z is None else delta_Z
        return cls(block.x, K.d, K.r, K.c, int(delta_S), int(delta_Z))

    def as_dict(self):
        return {"x": self.x, "d": self.d, "r": self.r, "c": self.c, "delta_S": self.delta_S, "delta_Z": self.delta_Z}


def field_delta(mu, p: int) -> int:
    """l(S'^+/S') for S' = Z_(p)[theta], theta a root of the monic integral mu."""
    from .numberring import NumberField

    if any(Fraction(c).denominator % p == 0 for c in mu) or Fraction(mu[-1]) != 1:
        raise ValueError("not p-integral")
    if not dedekind_pmaximal(mu, p):
        raise ValueError("not p-maximal")
    vals = smith_valuations(NumberField(mu).trace_gram, p)
    return int(sum(vals))


def faithful_invariants(R: GaloisNumberRing):
    return [BlockInvariants(R.h, 1, 1, 1, 0, 0)]


def _v(x, p):
    return valuation(Fraction(x), p)


# -- formulas -------------------------------------------------------------------


def wedderburn_colength(g, h, n, vn, delta, blocks, p: int) -> int:
    """(1/2)(g(delta + v(n)h) - sum x^2 (delta_S + v(x d / h) r))."""
    blocks = list(blocks)
    if vn is None:
        vn = _v(n, p)
    if sum(b.r * b.x * b.x for b in blocks) != g * h or vn != _v(n, p):
        raise ValueError("inconsistent invariants")
    twice = g * (delta + vn * h) - sum(b.x * b.x * (b.delta_S + _v(Fraction(b.x * b.d, h), p) * b.r) for b in blocks)
    if twice % 2 or twice < 0:
        raise ValueError("inconsistent invariants")
    return twice // 2


def class_terms(R: GaloisNumberRing, p: int):
    """Per nu in Cl_N^G: (nu, delta_{T_nu/S}, v([N : C_N(nu)]), h_nu)."""
    T = TwistedRing(R)
    G, L = R.G, R.L
    N = set(R.kernel)
    out = []
    for nu in nu_classes(T):
        C = G.centralizer(nu)
        B = fixed_subring_basis(R, C, p)
        h_nu = len(B)
        scale = Fraction(h_nu, R.h)
        gram = [[L.trace(L.mul(tuple(a), tuple(b))) * scale for b in B] for a in B]
        delta = int(sum(smith_valuations(gram, p)))
        index = len(N) // len(N.intersection(C))
        out.append((nu, delta, _v(index, p), h_nu))
    return out


def central_colength(R: GaloisNumberRing, p: int, blocks, terms=None) -> int:
    """(1/2)((sum_nu delta_nu + v([N:C_N(nu)]) h_nu) - (sum_i delta_Z_i + v(x^2 d^2 / (g h)) c_i))."""
    terms = class_terms(R, p) if terms is None else terms
    g, h = R.g, R.h
    first = sum(delta + vi * h_nu for _, delta, vi, h_nu in terms)
    second = sum(b.delta_Z + _v(Fraction(b.x * b.x * b.d * b.d, g * h), p) * b.c for b in blocks)
    twice = first - second
    if twice % 2 or twice < 0:
        raise ValueError("inconsistent invariants")
    return twice // 2


def bound_check(blocks, g: int, t: int, p: int, h: int | None = None, n: int | None = None):
    """v(x) + v(d) <= v(g) + t per block; with h, x d / h integral; with n prime to p, also prime to p."""
    ok = True
    details = []
    for b in blocks:
        lhs, rhs = _v(b.x, p) + _v(b.d, p), _v(g, p) + t
        good = lhs <= rhs
        if h is not None:
            good = good and (b.x * b.d) % h == 0
            if n is not None and n % p and (b.x * b.d) % h == 0:
                good = good and ((b.x * b.d) // h) % p != 0
        details.append({"lhs": lhs, "rhs": rhs, "ok": good})
        ok = ok and good
    return ok, details


# -- oracles --------------------------------------------------------------------


def embedding_valuations(R: GaloisNumberRing, p: int):
    """Smith valuations of Lambda inside End_S T (faithful action)."""
    if R.n != 1:
        raise ValueError("action not faithful")
    if not R.K_is_Q:
        raise ValueError("fixed field is larger than Q")
    if not dedekind_pmaximal(R.L.mu, p):
        raise ValueError("not p-maximal")
    T = TwistedRing(R)
    rows = [[c for row in principal_rep(T, b) for c in row] for b in T.basis()]
    return smith_valuations(rows, p)


def direct_embedding_colength(R: GaloisNumberRing, p: int) -> int:
    vals = embedding_valuations(R, p)
    if any(v == INF for v in vals):
        raise AssertionError("embedding is not injective")
    return int(sum(vals))


def annihilation_check(R: GaloisNumberRing, p: int, vals=None, W: WedderburnData | None = None):
    """Every elementary divisor of the cokernel has valuation at most v(n) + t."""
    ld = local_data(R, p)
    if vals is None:
        vals = embedding_valuations(R, p) if W is None else block_embedding(W, p)[1]
    bound = _v(R.n, p) + ld.t
    return all(v <= bound for v in vals), bound, [int(v) for v in vals]


def _integral_order_basis(K, p):
    """Power basis of Z_(p)[theta] and its trace dual, for a field block."""
    if K.kind != "field":
        raise ValueError("block order not available")
    if K.dim > 1 and not dedekind_pmaximal(K.F.mu, p):
        raise ValueError("block order not maximal")
    basis = [K.F.basis_vector(j) for j in range(K.dim)]
    dual = [tuple(r) for r in inverse(K.F.trace_gram)]
    return basis, dual


def _block_coordinates(W: WedderburnData, phi_blocks):
    """Flatten a tuple of block matrices into Q-coordinates (entry-major, then K-basis)."""
    out = []
    for b, M in zip(W.blocks, phi_blocks):
        for row in M:
            for w in row:
                out.extend(Fraction(c) for c in w)
    return out


def block_embedding(W: WedderburnData, p: int):
    """Colength of Lambda in prod (S_i)_{x_i}, with S_i = Z_(p)[theta_i]; returns (colength, valuations)."""
    W.require_complete()
    for b in W.blocks:
        _integral_order_basis(b.K, p)
    rows = [_block_coordinates(W, [W.blocks[i].images[k] for i in range(W.k)]) for k in range(W.T.dim)]
    try:
        vals = smith_valuations(rows, p)
    except ValueError:
        raise ValueError("representation not integral") from None
    if any(v == INF for v in vals):
        raise AssertionError("embedding is not injective")
    return int(sum(vals)), vals


def _matrix_unit_lattice(W: WedderburnData, p: int, scale_of, use_dual: bool):
    """Fourier preimages of scale * w * E_ab over every block, (a, b) and order (or dual) basis vector w."""
    rows = []
    for i, B in enumerate(W.blocks):
        basis, dual = _integral_order_basis(B.K, p)
        ws = dual if use_dual else basis
        sc = scale_of(B)
        for a in range(B.x):
            for c in range(B.x):
                for w in ws:
                    phi = [mzero(Bj.K, Bj.x) for Bj in W.blocks]
                    phi[i][a][c] = B.K.scale(sc, w)
                    rows.append(list(fourier_invert(W, phi).vector()))
    return rows


def _dual_lattice(rows, gram):
    """Basis of {y : (y, U) in S} for U spanned by rows, under the Gram matrix."""
    return inverse(matmul(gram, transpose(rows)))


def _same_lattice(A, B, p):
    return colength_of_rows(A, B, p) == 0 and colength_of_rows(B, A, p) == 0


def five_length_chain(W: WedderburnData, p: int):
    """The lengths l(L#/G#), l(L+/L), l(G/L), l(G+/G), l(G+/G#) and their alternating sum."""
    W.require_complete()
    T = W.T
    R = T.R
    g, h, n = W.g, W.h, W.n
    dim = T.dim
    eye = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    gram = bilinear_gram(T)
    lam = eye
    lam_plus = [list(T.element({s: W.dual_basis[l]}).vector()) for s in range(g) for l in range(T.m)]
    lam_sharp = _dual_lattice(lam, gram)
    gam = _matrix_unit_lattice(W, p, lambda B: Fraction(1), use_dual=False)
    gam_plus = _matrix_unit_lattice(W, p, lambda B: Fraction(h, B.x * B.d), use_dual=True)
    gam_sharp_claim = _matrix_unit_lattice(W, p, lambda B: Fraction(g, B.x * B.d), use_dual=True)
    gam_sharp = _dual_lattice(gam, gram)
    try:
        l3 = colength_of_rows(lam, gam, p)
    except ValueError:
        raise ValueError("representation not integral") from None
    lengths = {
        "sharp": colength_of_rows(gam_sharp, lam_sharp, p),
        "plus": colength_of_rows(lam, lam_plus, p),
        "embedding": l3,
        "gamma_plus": colength_of_rows(gam, gam_plus, p),
        "gamma_sharp": colength_of_rows(gam_sharp, gam_plus, p),
    }
    total = lengths["sharp"] - lengths["plus"] + lengths["embedding"] + lengths["gamma_plus"] - lengths["gamma_sharp"]
    ld = local_data(R, p)
    invs = [BlockInvariants.from_block(b, p) for b in W.blocks]
    checks = {
        "alternating sum vanishes": total == 0,
        "dual of Lambda is Lambda+": _same_lattice(lam_sharp, lam_plus, p),
        "dual of Gamma matches block description": _same_lattice(gam_sharp, gam_sharp_claim, p),
        "duality preserves colength": lengths["sharp"] == lengths["embedding"],
        "l(Lambda+/Lambda) = g delta": lengths["plus"] == g * ld.delta,
        "l(Gamma+/Gamma#) = v(n) g h": lengths["gamma_sharp"] == _v(n, p) * g * h,
        "l(Gamma+/Gamma) from invariants": lengths["gamma_plus"] == sum(
            b.x * b.x * (b.delta_S + _v(Fraction(b.x * b.d, h), p) * b.r) for b in invs),
        "embedding length equals formula": l3 == wedderburn_colength(g, h, n, None, ld.delta, invs, p),
    }
    return {"lengths": lengths, "alternating_sum": total, "checks": checks}


def integral_center_basis(R: GaloisNumberRing, p: int):
    """Z_(p)-basis of Z(Lambda): class sums of nu*y over cosets, y in a basis of T_nu."""
    T = TwistedRing(R)
    G = R.G
    out = []
    for nu in nu_classes(T):
        C = G.centralizer(nu)
        cosets = G.right_coset_reps(C)
        for y in fixed_subring_basis(R, C, p):
            y = tuple(Fraction(c) for c in y)
            terms = [R.L.zero] * T.g
            for rho in cosets:
                s = G.conj(nu, rho)
                terms[s] = R.L.add(terms[s], R.act(y, rho))
            out.append(T.from_vector([c for t in terms for c in t]))
    return out


def central_embedding_colength(W: WedderburnData, p: int) -> int:
    """Smith-form colength of Z(Lambda) in prod Z(S_i) via the block images of integral class sums."""
    W.require_complete()
    R = W.T.R
    rows = []
    for z in integral_center_basis(R, p):
        row = []
        for i, B in enumerate(W.blocks, 1):
            M = W.omega(i, z)
            lam = M[0][0]
            if M != [[lam if a == b else B.K.zero for b in range(B.x)] for a in range(B.x)]:
                raise AssertionError("class sum is not central in a block")
            if B.K.kind == "field":
                _integral_order_basis(B.K, p)
                row.extend(Fraction(c) for c in lam)
            else:
                if not B.K.is_central(lam):
                    raise AssertionError("class sum is not central in a block")
                row.append(Fraction(lam[0]))
        rows.append(row)
    if len(rows) != len(rows[0]):
        raise ValueError("missing blocks")
    try:
        vals = smith_valuations(rows, p)
    except ValueError:
        raise ValueError("representation not integral") from None
    if any(v == INF for v in vals):
        raise AssertionError("central embedding is not injective")
    return int(sum(vals))
