"""Coefficient fields: the rationals and finite fields F_q.

A field object carries the arithmetic; its elements are plain Python values
(``Fraction`` for the rationals, ``int`` in ``range(q)`` for F_q).  Generic
code (polynomials, dense linear algebra) only talks to the field object.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property


class RingMismatch(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def valuation(x, p: int):
    """p-adic valuation of an integer or rational; ``math.inf`` at zero."""
    x = Fraction(x)
    if x == 0:
        return math.inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def is_p_integral(x, p: int) -> bool:
    return Fraction(x).denominator % p != 0


def reduce_mod_p(x, p: int) -> int:
    """Image of a p-integral rational in F_p."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError("not p-integral")
    return x.numerator * pow(x.denominator, -1, p) % p


def parse_rational(s) -> Fraction:
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise TypeError(f"cannot read {s!r} as a rational")


def rational_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RationalField:
    """The field Q with ``Fraction`` elements."""

    name = "QQ"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def convert(self, x) -> Fraction:
        return parse_rational(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def to_str(self, a) -> str:
        return rational_str(a)


QQ = RationalField()


def _pf_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pf_mulmod(a, b, m, p):
    """Product of ascending coefficient lists over F_p, reduced mod monic m."""
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pf_rem(out, m, p)


def _pf_rem(a, m, p):
    a = list(a)
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            for j in range(dm + 1):
                a[k - dm + j] = (a[k - dm + j] - c * m[j]) % p
    return _pf_trim(a[:dm])


def _pf_gcd(a, b, p):
    a, b = _pf_trim(list(a)), _pf_trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        b = [c * inv % p for c in b]
        a, b = b, _pf_rem(a, b, p)
    return a


def _pf_powmod(base, e, m, p):
    result = [1]
    base = _pf_rem(base, m, p)
    while e:
        if e & 1:
            result = _pf_mulmod(result, base, m, p)
        base = _pf_mulmod(base, base, m, p)
        e >>= 1
    return result


def _pf_is_irreducible(m, p):
    """Rabin's test for a monic polynomial over F_p (ascending coefficients)."""
    n = len(m) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    primes = [r for r in range(2, n + 1) if n % r == 0 and is_prime(r)]
    for r in primes:
        h = _pf_powmod(x, p ** (n // r), m, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_pf_gcd(m, diff, p)) > 1:
            return False
    h = _pf_powmod(x, p**n, m, p)
    return h == [0, 1]


def conway_free_modulus(p: int, a: int) -> tuple:
    """First monic irreducible of degree ``a`` over F_p in lexicographic order
    of its low coefficients."""
    for code in range(p**a):
        low = [(code // p**k) % p for k in range(a)]
        if low[0] == 0:
            continue
        m = low + [1]
        if _pf_is_irreducible(m, p):
            return tuple(m)
    raise ValueError("no irreducible polynomial found")


class FiniteField:
    """F_q with q = p**a, elements encoded as ints ``sum c_k p**k``.

    For a > 1 the element with code c represents ``sum c_k t**k`` modulo the
    defining polynomial; multiplication goes through discrete log tables.
    """

    def __init__(self, p: int, a: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError("invalid prime")
        if a < 1:
            raise ValueError("extension degree must be positive")
        self.p = p
        self.a = a
        self.q = p**a
        self.characteristic = p
        self.zero = 0
        self.one = 1
        if a == 1:
            self.modulus = (0, 1)
        else:
            if self.q > 1 << 20:
                raise ValueError("field too large for table arithmetic")
            m = tuple(modulus) if modulus is not None else conway_free_modulus(p, a)
            if len(m) != a + 1 or m[-1] != 1 or not _pf_is_irreducible(list(m), p):
                raise ValueError("defining polynomial is not monic irreducible of degree a")
            self.modulus = m
            self._build_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.a})" if self.a > 1 else f"GF({self.p})"

    @property
    def name(self):
        return repr(self)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.a, self.modulus) == (other.p, other.a, other.modulus)

    def __hash__(self):
        return hash((self.p, self.a, self.modulus))

    # -- encoding ---------------------------------------------------------
    def to_vec(self, c: int) -> list:
        return [(c // self.p**k) % self.p for k in range(self.a)]

    def from_vec(self, v) -> int:
        return sum((int(x) % self.p) * self.p**k for k, x in enumerate(v))

    def _build_tables(self):
        p, q, m = self.p, self.q, list(self.modulus)
        # find a generator of the multiplicative group
        order = q - 1
        prime_divs = [r for r in range(2, order + 1) if order % r == 0 and is_prime(r)]
        for code in range(2, q):
            g = self.to_vec(code)
            if all(_pf_powmod(g, order // r, m, p) != [1] for r in prime_divs):
                break
        else:  # pragma: no cover - q = 2 handled by a == 1
            raise ValueError("no primitive element")
        exp = [0] * (2 * order)
        log = [0] * q
        cur = [1]
        for k in range(order):
            c = self.from_vec(cur)
            exp[k] = c
            log[c] = k
            cur = _pf_mulmod(cur, g, m, p)
        for k in range(order, 2 * order):
            exp[k] = exp[k - order]
        self._exp, self._log = exp, log
        self.generator = exp[1]

    # -- arithmetic -------------------------------------------------------
    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.q

    def convert(self, x) -> int:
        if isinstance(x, Fraction) or isinstance(x, str):
            return reduce_mod_p(parse_rational(x), self.p)
        if isinstance(x, int):
            return x % self.p
        raise RingMismatch(f"cannot convert {x!r} into {self}")

    def add(self, a, b):
        if self.a == 1:
            return (a + b) % self.p
        p = self.p
        out, k = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * k
            a //= p
            b //= p
            k *= p
        return out

    def neg(self, a):
        if self.a == 1:
            return (-a) % self.p
        return self.from_vec([-x for x in self.to_vec(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.a == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.a == 1:
            return pow(a, -1, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if self.a == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 0 if e > 0 else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def is_zero(self, a) -> bool:
        return a == 0

    def frobenius(self, a, k: int = 1):
        return self.pow(a, self.p**k)

    def elements(self):
        return range(self.q)

    def to_str(self, a) -> str:
        return str(a)

    @cached_property
    def prime_subfield(self) -> "FiniteField":
        return FiniteField(self.p) if self.a > 1 else self
