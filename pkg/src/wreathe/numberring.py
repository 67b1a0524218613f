"""Monogenic number fields L = Q[X]/(mu) with a right action of a finite group.

Elements of L are tuples of ``Fraction`` in the power basis 1, g, ..., g^(m-1)
where g is the class of X.  The action of a group element s is stored as the
polynomial a_s with g^s = a_s(g); because the action is on the right,
a_{st} = a_s o a_t.  As a linear map on row vectors, y^s = y @ A_s.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import sympy

from .exact.fields import QQ, FiniteField, is_p_integral, is_prime, rational_str, reduce_mod_p, valuation
from .exact.linalg import kernel, matmul, rref
from .exact.poly import Poly, factor_poly_fq, poly_gcd, poly_inverse_mod
from .exact.smith import INF, saturate, smith_valuations
from .groups import FiniteGroup


class NumberField:
    """Q[X]/(mu) for a monic irreducible mu."""

    def __init__(self, mu):
        mu = [Fraction(c) for c in mu]
        while mu and mu[-1] == 0:
            mu.pop()
        if len(mu) < 2:
            raise ValueError("not a field")
        if mu[-1] != 1:
            raise ValueError("defining polynomial must be monic")
        self.mu = tuple(mu)
        self.m = len(mu) - 1
        self.mu_poly = Poly(self.mu)
        self.zero = tuple(Fraction(0) for _ in range(self.m))
        self.one = self.basis_vector(0)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.mu == other.mu

    def __hash__(self):
        return hash(self.mu)

    def __repr__(self):
        return f"NumberField({self.mu_poly!r})"

    def basis_vector(self, j):
        return tuple(Fraction(int(k == j)) for k in range(self.m))

    @property
    def gen(self):
        return self.from_poly(Poly.x())

    def from_poly(self, f: Poly):
        r = f % self.mu_poly
        return tuple(r[k] for k in range(self.m))

    def to_poly(self, y) -> Poly:
        return Poly(list(y))

    def convert(self, c):
        if isinstance(c, tuple) and len(c) == self.m:
            return tuple(Fraction(x) for x in c)
        if isinstance(c, (list, tuple)):
            return self.from_poly(Poly([Fraction(x) for x in c]))
        return self.from_poly(Poly([Fraction(c)]))

    def contains(self, y):
        return isinstance(y, tuple) and len(y) == self.m and all(isinstance(x, (Fraction, int)) for x in y)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def scale(self, c, a):
        c = Fraction(c)
        return tuple(c * x for x in a)

    def mul(self, a, b):
        return self.from_poly(self.to_poly(a) * self.to_poly(b))

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return self.from_poly(poly_inverse_mod(self.to_poly(a), self.mu_poly))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        return self.from_poly(self.to_poly(a).powmod(e, self.mu_poly)) if e >= 0 else self.pow(self.inv(a), -e)

    def is_zero(self, a):
        return not any(a)

    def to_str(self, a):
        return repr(self.to_poly(a)).replace("X", "g") if any(a) else "0"

    @cached_property
    def power_traces(self):
        """Tr_{L/Q}(g^k) for k < 2m - 1 (Newton sums)."""
        out = []
        M = [list(r) for r in self.mult_matrix(self.gen)]
        P = [[Fraction(int(i == j)) for j in range(self.m)] for i in range(self.m)]
        for _ in range(2 * self.m - 1):
            out.append(sum(P[i][i] for i in range(self.m)))
            P = matmul(P, M)
        return tuple(out)

    def trace(self, y) -> Fraction:
        """Tr_{L/Q}."""
        return sum((c * t for c, t in zip(y, self.power_traces)), Fraction(0))

    def mult_matrix(self, y):
        """Rows: (g^j * y) in the power basis, so z @ M = z*y."""
        rows = []
        cur = y
        g = self.from_poly(Poly.x())
        for _ in range(self.m):
            rows.append(cur)
            cur = self.mul(cur, g)
        return rows

    @cached_property
    def trace_gram(self):
        t = self.power_traces
        return [[t[i + j] for j in range(self.m)] for i in range(self.m)]

    def is_irreducible(self):
        X = sympy.Symbol("X")
        sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(self.mu)], X, domain="QQ")
        return sp.is_irreducible


def parse_action(expr, mu_poly: Poly):
    """Polynomial a(X) mod mu from a coefficient list or a rational-function string in X."""
    if isinstance(expr, (list, tuple)):
        return Poly([Fraction(c) for c in expr]) % mu_poly
    X = sympy.Symbol("X")
    try:
        e = sympy.parse_expr(str(expr), local_dict={"X": X, "x": X})
    except Exception as exc:
        raise ValueError(f"cannot parse action {expr!r}") from exc
    num, den = sympy.fraction(sympy.together(e))

    def conv(s):
        sp = sympy.Poly(s, X, domain="QQ")
        return Poly([Fraction(int(c.p), int(c.q)) for c in reversed(sp.all_coeffs())])

    n, d = conv(num), conv(den)
    try:
        dinv = poly_inverse_mod(d, mu_poly)
    except ZeroDivisionError:
        raise ValueError("denominator not invertible modulo mu") from None
    return (n * dinv) % mu_poly


@dataclass
class GaloisNumberRing:
    """L = Q[X]/(mu) with a validated right action of G (by automorphisms)."""

    L: NumberField
    G: FiniteGroup
    action: list  # per group element, tuple of Fractions: a_s(g) in power basis
    primes: tuple = ()
    mats: list = field(default_factory=list)

    def __post_init__(self):
        if not self.mats:
            self.mats = [_action_matrix(self.L, a) for a in self.action]

    @property
    def m(self):
        return self.L.m

    @cached_property
    def kernel(self):
        g0 = self.L.gen
        return [s for s in range(self.G.order) if self.action[s] == g0]

    @property
    def n(self):
        return len(self.kernel)

    @property
    def g(self):
        return self.G.order

    @property
    def h(self):
        return self.g // self.n

    @cached_property
    def fixed_basis(self):
        """Q-basis of K = Fix_G(L), in RREF."""
        return fixed_space(self, self.G.subgroup_generators(range(self.g)) or [0])

    @property
    def K_is_Q(self):
        return self.h == self.m

    def act(self, y, s):
        """y^s."""
        A = self.mats[s]
        return tuple(sum((y[j] * A[j][k] for j in range(self.m)), Fraction(0)) for k in range(self.m))

    def trace_LK(self, y):
        """Tr_{L/K}(y) = (1/n) sum over G of y^s, as an element of L."""
        acc = self.L.zero
        for s in range(self.g):
            acc = self.L.add(acc, self.act(y, s))
        return self.L.scale(Fraction(1, self.n), acc)

    def is_p_integral(self, p):
        return all(is_p_integral(c, p) for a in self.action for c in a)


def _action_matrix(L: NumberField, a):
    """Rows: (g^j)^s = a^j in the power basis."""
    rows = []
    cur = L.one
    for _ in range(L.m):
        rows.append(cur)
        cur = L.mul(cur, a)
    return rows


def build_and_validate(mu, group: FiniteGroup, action: dict, primes=()) -> GaloisNumberRing:
    """Build L with the G-action given on generators and check every axiom.

    ``action`` maps generator index (in ``group``) to a polynomial or
    rational-function string in X.  The action is extended over the Cayley
    graph via a_{st} = a_s o a_t and checked for consistency on every edge.
    """
    L = NumberField(mu)
    if not L.is_irreducible():
        raise ValueError("not a field")
    G = group
    mup = L.mu_poly
    gens = {}
    for s, expr in action.items():
        a = parse_action(expr, mup)
        if not (mup.compose(a) % mup).is_zero():
            raise ValueError("not an automorphism")
        gens[int(s)] = a
    table = {0: Poly.x() % mup}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s, a in gens.items():
                y = G.mul(x, s)
                ay = table[x].compose(a) % mup
                if y in table:
                    if table[y] != ay:
                        raise ValueError("not a right action")
                else:
                    table[y] = ay
                    nxt.append(y)
        frontier = nxt
    if len(table) != G.order:
        raise ValueError("action generators do not generate the group")
    act = [L.from_poly(table[s]) for s in range(G.order)]
    R = GaloisNumberRing(L, G, act, tuple(primes))
    for p in primes:
        check_prime(R, p)
    return R


def check_prime(R: GaloisNumberRing, p: int):
    if not is_prime(p):
        raise ValueError("invalid prime")
    if not all(is_p_integral(c, p) for c in R.L.mu):
        raise ValueError("not p-integral")
    if not R.is_p_integral(p):
        raise ValueError("action not p-integral")


def fixed_space(R: GaloisNumberRing, gens) -> list:
    """Q-basis (RREF rows) of the subspace of L fixed by the listed elements."""
    m = R.m
    if not gens:
        return [list(R.L.basis_vector(j)) for j in range(m)]
    # y (A_s - I) = 0 for each s  <=>  (A_s - I)^T y^T = 0
    eqs = []
    for s in gens:
        A = R.mats[s]
        for k in range(m):
            eqs.append([A[j][k] - (1 if j == k else 0) for j in range(m)])
    basis = kernel(eqs, QQ, ncols=m)
    return rref(basis)[0] if basis else []


def fixed_subring_basis(R: GaloisNumberRing, U, p: int | None = None) -> list:
    """Basis of Fix_U(L); with p, a Z_(p)-basis of Z_(p)[g] meeting Fix_U(L)."""
    gens = R.G.subgroup_generators(U)
    B = fixed_space(R, gens)
    if p is None or not B:
        return B
    # RREF rows are canonical; keep them when they already give a saturated lattice
    if all(is_p_integral(x, p) for r in B for x in r):
        if all(v == 0 for v in smith_valuations(B, p)):
            return B
    return saturate(B, p)


@dataclass
class LocalData:
    p: int
    factors: list  # [(Poly over F_p, multiplicity)]
    e: int
    f: int
    d: int
    s: int | None = None
    t: int | None = None
    delta: int | None = None
    gram_valuations: list | None = None

    def as_dict(self):
        out = {"p": self.p, "e": self.e, "f": self.f, "d": self.d,
               "factors": [[[int(c) for c in g.coeffs], m] for g, m in self.factors]}
        for k in ("s", "t", "delta"):
            v = getattr(self, k)
            out[k] = None if v is None else int(v)
        return out


def mu_mod_p(mu, p):
    F = FiniteField(p)
    return Poly([reduce_mod_p(c, p) for c in mu], F)


def local_data(R: GaloisNumberRing, p: int, seed: int = 0) -> LocalData:
    check_prime(R, p)
    L = R.L
    if poly_gcd(L.mu_poly, L.mu_poly.derivative()).degree > 0:
        raise ValueError("not a field")
    fac = factor_poly_fq(mu_mod_p(L.mu, p), seed=seed)
    es = {m for _, m in fac}
    fs = {g.degree for g, _ in fac}
    if len(es) != 1 or len(fs) != 1:
        raise ValueError("ramification not uniform over the prime")
    e, f, d = es.pop(), fs.pop(), len(fac)
    ld = LocalData(p, fac, e, f, d)
    if R.K_is_Q:
        if not dedekind_pmaximal(L.mu, p):
            raise ValueError("not p-maximal")
        traces = L.power_traces[: L.m]
        ld.s = int(min(valuation(t, p) for t in traces if t != 0))
        vals = smith_valuations(L.trace_gram, p)
        ld.gram_valuations = vals
        ld.t = int(max(v for v in vals if v != INF))
        ld.delta = int(sum(v for v in vals if v != INF))
    return ld


def dedekind_pmaximal(mu, p: int) -> bool:
    """Dedekind's criterion: is Z_(p)[X]/(mu) integrally closed?"""
    mu = [Fraction(c) for c in mu]
    if not all(is_p_integral(c, p) for c in mu):
        raise ValueError("not p-integral")
    F = FiniteField(p)
    mubar = Poly([reduce_mod_p(c, p) for c in mu], F)
    fac = factor_poly_fq(mubar)
    if all(m == 1 for _, m in fac):
        return True
    gbar = Poly.const(1, F)
    for g, _ in fac:
        gbar = gbar * g
    hbar = mubar // gbar
    lift = lambda f: Poly([Fraction(c) for c in f.coeffs])
    diff = lift(gbar) * lift(hbar) - Poly(mu)
    Fbar = Poly([reduce_mod_p(c / p, p) for c in diff.coeffs], F)
    return poly_gcd(poly_gcd(Fbar, gbar), hbar).degree == 0


def projectivity_check(R: GaloisNumberRing, p: int, ld: LocalData | None = None):
    """Is T a projective T-wreath-G module? Returns (verdict, reasons)."""
    ld = ld or local_data(R, p)
    reasons = []
    if R.n % p == 0:
        reasons.append(f"p divides n = {R.n}")
    if ld.e % p == 0:
        reasons.append(f"wild ramification: p divides e = {ld.e}")
    if not reasons:
        reasons.append(f"p does not divide n = {R.n} and e = {ld.e} is tame")
        return True, reasons
    return False, reasons


@dataclass
class ResidueData:
    """T-bar = F_p[X]/(mu-bar), its semisimple quotient T0 = F_p[X]/(rad mu-bar), and the G-actions."""

    p: int
    F: FiniteField
    mubar: Poly
    rad: Poly
    factors: list
    action: list  # per element, Poly over F_p: image of X in T-bar
    mats: list  # per element, action matrix on T-bar (numpy, row convention)
    mats0: list  # per element, action matrix on T0

    @property
    def dim(self):
        return self.mubar.degree

    @property
    def dim0(self):
        return self.rad.degree

    def quotient_matrix(self):
        """m x m0 matrix of T-bar -> T0 on power bases."""
        import numpy as np

        F = self.F
        rows = []
        x = Poly.x(F)
        for j in range(self.dim):
            r = x.powmod(j, self.rad) if self.rad.degree > 0 else Poly([], F)
            rows.append([r[k] for k in range(self.dim0)])
        return np.array(rows, dtype=np.int64).reshape(self.dim, self.dim0)

    def idempotents0(self):
        """Primitive idempotents of T0 by CRT, as coefficient vectors."""
        F = self.F
        out = []
        for g, _ in self.factors:
            other = self.rad // g
            inv = poly_inverse_mod(other % g, g)
            e = (other * inv) % self.rad
            out.append(tuple(e[k] for k in range(self.dim0)))
        return out

    def mul0(self, a, b):
        F = self.F
        r = (Poly(list(a), F) * Poly(list(b), F)) % self.rad
        return tuple(r[k] for k in range(self.dim0))

    def mul(self, a, b):
        F = self.F
        r = (Poly(list(a), F) * Poly(list(b), F)) % self.mubar
        return tuple(r[k] for k in range(self.dim))


def _fp_action_matrix(a: Poly, mod: Poly):
    import numpy as np

    F = a.field
    n = mod.degree
    rows = []
    cur = Poly.const(1, F) % mod
    a = a % mod
    for _ in range(n):
        rows.append([cur[k] for k in range(n)])
        cur = (cur * a) % mod
    return np.array(rows, dtype=np.int64).reshape(n, n)


def reduce_ring_mod_p(R: GaloisNumberRing, p: int, seed: int = 0) -> ResidueData:
    check_prime(R, p)
    F = FiniteField(p)
    mubar = mu_mod_p(R.L.mu, p)
    fac = factor_poly_fq(mubar, seed=seed)
    rad = Poly.const(1, F)
    for g, _ in fac:
        rad = rad * g
    acts = [Poly([reduce_mod_p(c, p) for c in a], F) for a in R.action]
    mats = [_fp_action_matrix(a, mubar) for a in acts]
    mats0 = [_fp_action_matrix(a, rad) for a in acts]
    return ResidueData(p, F, mubar, rad, fac, acts, mats, mats0)


def element_str(L: NumberField, y) -> str:
    terms = []
    for k, c in enumerate(y):
        if c == 0:
            continue
        mon = "" if k == 0 else ("g" if k == 1 else f"g^{k}")
        if k == 0:
            terms.append(rational_str(c))
        elif c == 1:
            terms.append(mon)
        elif c == -1:
            terms.append("-" + mon)
        else:
            terms.append(f"{rational_str(c)}*{mon}")
    return " + ".join(terms).replace("+ -", "- ") or "0"
