"""The twisted group ring L x G with coefficients on the right.

An element is a tuple of g field elements: entry s is the coefficient y_s of
the group element s, i.e. the element sum_s s*y_s.  The product is
(s y)(t z) = (st) (y^t z).  Flat coordinates use index s*m + j for the
basis element s*g^j.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .exact.fields import QQ, is_p_integral, rational_str, valuation
from .exact.linalg import inverse, kernel, matmul, rank, rref, solve_left
from .numberring import GaloisNumberRing, element_str, fixed_subring_basis


class TwistedElement:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "TwistedRing", coeffs):
        self.ring = ring
        self.coeffs = tuple(coeffs)

    def _check(self, other):
        if not isinstance(other, TwistedElement) or other.ring is not self.ring:
            raise ValueError("incompatible rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        L = self.ring.L
        return TwistedElement(self.ring, (L.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._check(other)
        L = self.ring.L
        return TwistedElement(self.ring, (L.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TwistedElement(self.ring, (self.ring.L.neg(a) for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return self.ring.mul(self, self._check(other))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        L = self.ring.L
        return TwistedElement(self.ring, (L.scale(c, a) for a in self.coeffs))

    def __eq__(self, other):
        return isinstance(other, TwistedElement) and other.ring is self.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self):
        return not any(any(a) for a in self.coeffs)

    def support(self):
        return [s for s, a in enumerate(self.coeffs) if any(a)]

    def vector(self):
        return [c for a in self.coeffs for c in a]

    def __repr__(self):
        return self.ring.to_str(self)


class TwistedRing:
    """L x G for a validated GaloisNumberRing."""

    def __init__(self, R: GaloisNumberRing):
        self.R = R
        self.L = R.L
        self.G = R.G
        self.g = R.g
        self.m = R.m

    @property
    def dim(self):
        return self.g * self.m

    # -- construction -----------------------------------------------------
    def element(self, terms) -> TwistedElement:
        """From a dict {group index: field element or rational}."""
        coeffs = [self.L.zero] * self.g
        for s, y in dict(terms).items():
            coeffs[s] = self.L.add(coeffs[s], self.L.convert(y))
        return TwistedElement(self, coeffs)

    def zero(self):
        return TwistedElement(self, [self.L.zero] * self.g)

    def one(self):
        return self.element({0: 1})

    def group_element(self, s):
        return self.element({s: 1})

    def scalar(self, y):
        return self.element({0: y})

    def basis_element(self, k):
        s, j = divmod(k, self.m)
        return self.element({s: self.L.basis_vector(j)})

    def basis(self):
        return [self.basis_element(k) for k in range(self.dim)]

    def from_vector(self, v):
        m = self.m
        return TwistedElement(self, (tuple(Fraction(x) for x in v[s * m:(s + 1) * m]) for s in range(self.g)))

    def left_coefficient(self, y, s):
        """The element y*s, rewritten as s*y^s."""
        return self.element({s: self.R.act(self.L.convert(y), s)})

    # -- arithmetic -------------------------------------------------------
    def mul(self, a: TwistedElement, b: TwistedElement) -> TwistedElement:
        L, G, R = self.L, self.G, self.R
        out = [L.zero] * self.g
        bs = [(t, z) for t, z in enumerate(b.coeffs) if any(z)]
        for s, y in enumerate(a.coeffs):
            if not any(y):
                continue
            for t, z in bs:
                st = G.mul(s, t)
                out[st] = L.add(out[st], L.mul(R.act(y, t), z))
        return TwistedElement(self, out)

    @cached_property
    def algebra_generators(self):
        gens = [self.group_element(s) for s in self.G.subgroup_generators(range(self.g))]
        if self.m > 1:
            gens.append(self.scalar(self.L.gen))
        return gens

    def is_central(self, x: TwistedElement) -> bool:
        return all(x * b == b * x for b in self.algebra_generators)

    # -- display ----------------------------------------------------------
    def to_str(self, x: TwistedElement) -> str:
        terms = []
        for s, y in enumerate(x.coeffs):
            if not any(y):
                continue
            gs = self.G.name(s)
            ys = element_str(self.L, y)
            if ys == "1":
                terms.append(gs)
            elif ys == "-1":
                terms.append("-" + gs)
            elif sum(1 for c in y if c) == 1:
                terms.append(f"{gs}*{ys}")
            else:
                terms.append(f"{gs}*({ys})")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def to_left_str(self, x: TwistedElement) -> str:
        """Normalized left form: sum of y'*s with y' = y^(s^-1)."""
        terms = []
        for s, y in enumerate(x.coeffs):
            if not any(y):
                continue
            yl = self.R.act(y, self.G.inv(s))
            ys = element_str(self.L, yl)
            gs = self.G.name(s)
            if ys == "1":
                terms.append(gs)
            elif ys == "-1":
                terms.append("-" + gs)
            elif sum(1 for c in yl if c) == 1:
                terms.append(f"{ys}*{gs}")
            else:
                terms.append(f"({ys})*{gs}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def serialize(self, x: TwistedElement) -> dict:
        return {self.G.name(s): [rational_str(c) for c in y] for s, y in enumerate(x.coeffs) if any(y)}


# -- center ------------------------------------------------------------------

@dataclass
class CenterBasis:
    elements: list
    labels: list  # (class representative nu, coefficient y in L_nu)
    class_reps: list  # Cl_N^G
    h_nu: dict  # nu -> dim_K L_nu
    L_nu: dict  # nu -> basis of L_nu

    def __len__(self):
        return len(self.elements)


def nu_classes(T: TwistedRing):
    """Representatives of G-conjugacy classes inside N, least element of each."""
    G = T.G
    N = set(T.R.kernel)
    seen = set()
    reps = []
    for nu in sorted(N):
        if nu in seen:
            continue
        orbit = {G.conj(nu, r) for r in range(G.order)}
        seen |= orbit
        reps.append(min(orbit))
    return reps


def center_basis(T: TwistedRing) -> CenterBasis:
    G, R = T.G, T.R
    elements, labels, h_nu, L_nu = [], [], {}, {}
    reps = nu_classes(T)
    for nu in reps:
        C = G.centralizer(nu)
        Lb = fixed_subring_basis(R, C)
        h_nu[nu] = len(Lb)
        L_nu[nu] = [tuple(Fraction(c) for c in y) for y in Lb]
        cosets = G.right_coset_reps(C)
        for y in L_nu[nu]:
            terms = [T.L.zero] * T.g
            for rho in cosets:
                s = G.conj(nu, rho)
                terms[s] = T.L.add(terms[s], R.act(y, rho))
            elements.append(TwistedElement(T, terms))
            labels.append((nu, y))
    return CenterBasis(elements, labels, reps, h_nu, L_nu)


def center_dimension_untwisted(T: TwistedRing) -> int:
    """dim_L Z(LN) for the ordinary group algebra of the kernel: its class count."""
    G = T.G
    N = T.R.kernel
    Nset = set(N)
    seen = set()
    count = 0
    for a in N:
        if a in seen:
            continue
        count += 1
        seen |= {G.conj(a, r) for r in N if r in Nset}
    return count


def epsilon1(T: TwistedRing, p: int | None = None) -> TwistedElement:
    n = T.R.n
    if p is not None and n % p == 0:
        raise ValueError("Maschke fails")
    return T.element({nu: Fraction(1, n) for nu in T.R.kernel})


def assumption_normal_cover(T: TwistedRing) -> bool:
    """C_G(nu) N = G for every nu in N."""
    G = T.G
    N = T.R.kernel
    for nu in N:
        C = G.centralizer(nu)
        prod = {G.mul(c, x) for c in C for x in N}
        if len(prod) != G.order:
            return False
    return True


# -- bilinear forms -------------------------------------------------------------

def _require_K_is_Q(T):
    if not T.R.K_is_Q:
        raise ValueError("fixed field is larger than Q")


def form(T: TwistedRing, a: TwistedElement, b: TwistedElement) -> Fraction:
    """(s y, t z) = [s = t^-1] Tr(y^t z), extended bilinearly."""
    _require_K_is_Q(T)
    L, G, R = T.L, T.G, T.R
    acc = Fraction(0)
    for s, y in enumerate(a.coeffs):
        if not any(y):
            continue
        t = G.inv(s)
        z = b.coeffs[t]
        if any(z):
            acc += L.trace(L.mul(R.act(y, t), z))
    return acc


def bilinear_gram(T: TwistedRing):
    B = T.basis()
    return [[form(T, x, y) for y in B] for x in B]


def central_form(T: TwistedRing, CB: CenterBasis, i: int, j: int) -> Fraction:
    """Value of the central form on two center basis vectors."""
    _require_K_is_Q(T)
    G, R, L = T.G, T.R, T.L
    nu, y = CB.labels[i]
    nu2, y2 = CB.labels[j]
    inv2 = G.inv(nu2)
    tau = next((r for r in range(G.order) if G.conj(inv2, r) == nu), None)
    if tau is None:
        return Fraction(0)
    N = T.R.kernel
    CN = sum(1 for x in N if G.mul(x, nu) == G.mul(nu, x))
    index = len(N) // CN
    w = L.mul(y, R.act(y2, tau))
    # Tr_{L_nu/K} = Tr_{L/Q} / [L : L_nu]
    return index * L.trace(w) * Fraction(CB.h_nu[nu], R.h)


def central_gram(T: TwistedRing, CB: CenterBasis):
    k = len(CB)
    return [[central_form(T, CB, i, j) for j in range(k)] for i in range(k)]


def central_form_on(T: TwistedRing, CB: CenterBasis, a: TwistedElement, b: TwistedElement) -> Fraction:
    """Central form on arbitrary central elements via center-basis coordinates."""
    ca, cb = center_coordinates(T, CB, a), center_coordinates(T, CB, b)
    Gm = central_gram(T, CB)
    return sum((ca[i] * Gm[i][j] * cb[j] for i in range(len(ca)) for j in range(len(cb))), Fraction(0))


def center_coordinates(T: TwistedRing, CB: CenterBasis, x: TwistedElement):
    B = [e.vector() for e in CB.elements]
    try:
        return solve_left(B, x.vector())
    except ValueError:
        raise ValueError("not central") from None


# -- principal module -------------------------------------------------------

def principal_rep(T: TwistedRing, x: TwistedElement):
    """Matrix of x on L (row vectors): y . (s z) = y^s z."""
    L, R = T.L, T.R
    m = T.m
    M = [[Fraction(0)] * m for _ in range(m)]
    for s, z in enumerate(x.coeffs):
        if not any(z):
            continue
        P = matmul(R.mats[s], L.mult_matrix(z))
        for i in range(m):
            for j in range(m):
                M[i][j] += P[i][j]
    return M


def principal_image_rank(T: TwistedRing, elements=None) -> int:
    elements = T.basis() if elements is None else elements
    rows = [[c for r in principal_rep(T, x) for c in r] for x in elements]
    return rank(rows)


def trace_one_element(T: TwistedRing):
    """First u = g^k / Tr(g^k) in the power basis with Tr_{L/K}(u) = 1."""
    L, R = T.L, T.R
    for k in range(T.m):
        y = L.basis_vector(k)
        t = R.trace_LK(y)
        if any(t):
            return L.div(y, t)
    raise ValueError("trace vanishes")


def trace_p_element(T: TwistedRing, p: int):
    """u0 in Z_(p)[g] with Tr(u0) = p^s (K = Q)."""
    _require_K_is_Q(T)
    L = T.L
    traces = L.power_traces[: T.m]
    s = min(valuation(t, p) for t in traces if t != 0)
    for k, t in enumerate(traces):
        if t != 0 and valuation(t, p) == s:
            return L.scale(Fraction(p) ** s / t, L.basis_vector(k)), int(s)
    raise ValueError("trace vanishes")


# -- modules -------------------------------------------------------------------

class TwistedModule:
    """A right module given by Q-matrices of the group elements and of g (the generator of L)."""

    def __init__(self, T: TwistedRing, group_mats: dict, gamma):
        self.T = T
        self.dim = len(gamma)
        G = T.G
        mats = {0: _eye(self.dim)}
        frontier = [0]
        gens = dict(group_mats)
        while frontier:
            nxt = []
            for x in frontier:
                for s, A in gens.items():
                    y = G.mul(x, s)
                    P = matmul(mats[x], A)
                    if y in mats:
                        if mats[y] != P:
                            raise ValueError("inconsistent module data")
                    else:
                        mats[y] = P
                        nxt.append(y)
            frontier = nxt
        if len(mats) != G.order:
            raise ValueError("module generators do not generate the group")
        self.group = [mats[s] for s in range(G.order)]
        self.gamma = [list(r) for r in gamma]
        self.gamma_pows = [_eye(self.dim)]
        for _ in range(1, T.m):
            self.gamma_pows.append(matmul(self.gamma_pows[-1], self.gamma))

    def scalar_matrix(self, y):
        d = self.dim
        M = [[Fraction(0)] * d for _ in range(d)]
        for c, P in zip(y, self.gamma_pows):
            if c:
                for i in range(d):
                    for j in range(d):
                        M[i][j] += c * P[i][j]
        return M

    def matrix(self, x: TwistedElement):
        d = self.dim
        M = [[Fraction(0)] * d for _ in range(d)]
        for s, z in enumerate(x.coeffs):
            if not any(z):
                continue
            P = matmul(self.group[s], self.scalar_matrix(z))
            for i in range(d):
                for j in range(d):
                    M[i][j] += P[i][j]
        return M

    def act(self, v, x: TwistedElement):
        M = self.matrix(x)
        return [sum((v[i] * M[i][j] for i in range(self.dim)), Fraction(0)) for j in range(self.dim)]

    def is_module_map(self, f, other: "TwistedModule") -> bool:
        gens = self.T.algebra_generators
        return all(matmul(self.matrix(b), f) == matmul(f, other.matrix(b)) for b in gens)


def _eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def regular_module(T: TwistedRing) -> TwistedModule:
    """Lx G acting on itself by right multiplication, in flat coordinates."""
    B = T.basis()

    def right_mult(x):
        return [(b * x).vector() for b in B]

    gens = {s: right_mult(T.group_element(s)) for s in T.G.subgroup_generators(range(T.g))}
    return TwistedModule(T, gens, right_mult(T.scalar(T.L.gen)))


def submodule(M: TwistedModule, rows) -> tuple:
    """Restrict M to the invariant subspace spanned by ``rows``; returns (module, basis)."""
    basis = rref(rows)[0]
    T = M.T

    def restrict(A):
        return [solve_left(basis, [sum((v[i] * A[i][j] for i in range(M.dim)), Fraction(0)) for j in range(M.dim)])
                for v in basis]

    gens = {s: restrict(M.group[s]) for s in T.G.subgroup_generators(range(T.g))}
    return TwistedModule(T, gens, restrict(M.gamma)), basis


def maschke_coretraction(M: TwistedModule, M2: TwistedModule, f, u=None, p: int | None = None):
    """Module map i : M2 -> M with i f = id (or p^s n id with p given).

    f is a dim M x dim M2 matrix (x -> x f).  The average over G of a section
    that is only L-linear is corrected by the trace-one element u.
    """
    T = M.T
    n = T.R.n
    if p is not None and n % p == 0:
        raise ValueError("Maschke fails")
    if rank(f) != M2.dim:
        raise ValueError("not an epimorphism")
    if not M.is_module_map(f, M2):
        raise ValueError("not a module map")
    i0 = _l_linear_section(M, M2, f)
    if p is None:
        u = trace_one_element(T) if u is None else u
        scale = Fraction(1, n)
    else:
        u, _ = trace_p_element(T, p) if u is None else (u, None)
        scale = Fraction(1)
    G = T.G
    d2, d = M2.dim, M.dim
    I = [[Fraction(0)] * d for _ in range(d2)]
    Um = M.scalar_matrix(u)
    for s in range(T.g):
        P = matmul(matmul(M2.group[s], i0), matmul(Um, M.group[G.inv(s)]))
        for a in range(d2):
            for b in range(d):
                I[a][b] += scale * P[a][b]
    return I


def _l_linear_section(M: TwistedModule, M2: TwistedModule, f):
    """Q-matrix i0 : M2 -> M, L-linear, with i0 f = id."""
    T = M.T
    # choose an L-basis of M2 greedily, lift each basis vector, extend L-linearly
    chosen, span = [], []
    for k in range(M2.dim):
        v = [Fraction(int(j == k)) for j in range(M2.dim)]
        if span and rank(span + [v]) == len(span):
            continue
        orbit = [v]
        for _ in range(1, T.m):
            orbit.append([sum((orbit[-1][i] * M2.gamma[i][j] for i in range(M2.dim)), Fraction(0)) for j in range(M2.dim)])
        chosen.append(v)
        span = rref(span + orbit)[0]
    src, img = [], []
    for v in chosen:
        w = solve_left(f, v)
        for j in range(T.m):
            src.append([sum((v[i] * M2.gamma_pows[j][i][c] for i in range(M2.dim)), Fraction(0)) for c in range(M2.dim)])
            img.append([sum((w[i] * M.gamma_pows[j][i][c] for i in range(M.dim)), Fraction(0)) for c in range(M.dim)])
    # i0 = src^-1 img
    return matmul(inverse(src), img)


def is_p_integral_element(x: TwistedElement, p: int) -> bool:
    return all(is_p_integral(c, p) for y in x.coeffs for c in y)
