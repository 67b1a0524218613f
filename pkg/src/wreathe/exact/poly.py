"""Dense univariate polynomials over a field object, and factoring over F_q."""
from __future__ import annotations

import random
from fractions import Fraction

from .fields import QQ, FiniteField


class Poly:
    """Immutable polynomial, coefficients in ascending degree."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=QQ):
        cs = [field.convert(c) if not field.contains(c) else c for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    # -- constructors -----------------------------------------------------
    @classmethod
    def x(cls, field=QQ):
        return cls([field.zero, field.one], field)

    @classmethod
    def const(cls, c, field=QQ):
        return cls([c], field)

    # -- basics -----------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if self.field.is_zero(c):
                continue
            s = self.field.to_str(c)
            terms.append(s if k == 0 else f"{s}*X^{k}")
        return " + ".join(terms)

    def _check(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other, self.field)
        if other.field != self.field:
            raise ValueError("ring mismatch")
        return other

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([F.add(self[k], other[k]) for k in range(n)], F)

    __radd__ = __add__

    def __neg__(self):
        return Poly([self.field.neg(c) for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        F = self.field
        if not self.coeffs or not other.coeffs:
            return Poly([], F)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(out, F)

    __rmul__ = __mul__

    def scale(self, c):
        return Poly([self.field.mul(c, a) for a in self.coeffs], self.field)

    def __pow__(self, e: int):
        result = Poly.const(self.field.one, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly([], F), self
        quo = [F.zero] * (dq + 1)
        inv = F.inv(other.lc)
        db = other.degree
        for k in range(dq, -1, -1):
            c = F.mul(rem[k + db], inv)
            quo[k] = c
            if F.is_zero(c):
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = F.sub(rem[k + j], F.mul(c, b))
        return Poly(quo, F), Poly(rem[:db], F)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc))

    def derivative(self):
        F = self.field
        return Poly([F.mul(F.convert(k) if F is not QQ else Fraction(k), c)
                     for k, c in enumerate(self.coeffs)][1:], F)

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def compose(self, g: "Poly") -> "Poly":
        acc = Poly([], self.field)
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def powmod(self, e: int, mod: "Poly") -> "Poly":
        result = Poly.const(self.field.one, self.field) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Return (g, s, t) with s*a + t*b = g monic."""
    F = a.field
    r0, r1 = a, b
    s0, s1 = Poly.const(F.one, F), Poly([], F)
    t0, t1 = Poly([], F), Poly.const(F.one, F)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = F.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_inverse_mod(a: Poly, m: Poly) -> Poly:
    g, s, _ = poly_xgcd(a % m, m)
    if g.degree != 0:
        raise ZeroDivisionError("not invertible modulo the polynomial")
    return s % m


# -- factorization over F_q ----------------------------------------------

def _pth_root(f: Poly) -> Poly:
    F = f.field
    p = F.p
    out = []
    for k in range(0, len(f.coeffs), p):
        out.append(F.pow(f.coeffs[k], F.q // p))
    return Poly(out, F)


def squarefree_factorization(f: Poly):
    """Monic f over F_q -> list of (g, m), g squarefree, f = prod g**m."""
    F = f.field
    one = Poly.const(F.one, F)
    result = []
    df = f.derivative()
    if df.is_zero():
        for g, m in squarefree_factorization(_pth_root(f)):
            result.append((g, m * F.p))
        return result
    c = poly_gcd(f, df)
    w = f // c
    i = 1
    while w != one:
        y = poly_gcd(w, c)
        z = w // y
        if z != one:
            result.append((z.monic(), i))
        i += 1
        w = y
        c = c // y
    if c != one:
        for g, m in squarefree_factorization(_pth_root(c.monic())):
            result.append((g, m * F.p))
    return result


def distinct_degree_factorization(f: Poly):
    F = f.field
    x = Poly.x(F)
    h = x % f
    out = []
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(F.q, f)
        g = poly_gcd(f, h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f.monic(), f.degree))
    return out


def _random_poly(F, deg, rng):
    return Poly([rng.randrange(F.q) for _ in range(deg)], F)


def equal_degree_split(f: Poly, d: int, rng: random.Random):
    """Cantor-Zassenhaus: split f, a product of distinct degree-d irreducibles."""
    F = f.field
    if f.degree == d:
        return [f.monic()]
    while True:
        a = _random_poly(F, f.degree, rng)
        if a.degree < 1:
            continue
        if F.p == 2:
            # absolute trace to F_2 of F_{q^d}
            b = a % f
            t = b
            for _ in range(F.a * d - 1):
                b = (b * b) % f
                t = t + b
        else:
            t = a.powmod((F.q**d - 1) // 2, f) - Poly.const(F.one, F)
        g = poly_gcd(f, t)
        if 0 < g.degree < f.degree:
            return equal_degree_split(g, d, rng) + equal_degree_split(f // g, d, rng)


def _sort_key(item):
    g, m = item
    return (g.degree, tuple(reversed(g.coeffs)), m)


def factor_poly_fq(f: Poly, seed: int = 0):
    """Irreducible factorization of f over F_q as sorted (monic factor, multiplicity).

    The leading coefficient is dropped; equal-degree splitting draws from a
    ``random.Random(seed)`` stream, so output is reproducible.
    """
    if not isinstance(f.field, FiniteField):
        raise ValueError("ring mismatch")
    if f.is_zero():
        raise ValueError("zero input")
    rng = random.Random(seed)
    out = []
    if f.degree == 0:
        return out
    for g, m in squarefree_factorization(f.monic()):
        for h, d in distinct_degree_factorization(g):
            for irr in equal_degree_split(h, d, rng):
                out.append((irr, m))
    merged = {}
    for g, m in out:
        merged[g] = merged.get(g, 0) + m
    return sorted(merged.items(), key=_sort_key)


def is_irreducible_fq(f: Poly) -> bool:
    fac = factor_poly_fq(f)
    return len(fac) == 1 and fac[0][1] == 1
