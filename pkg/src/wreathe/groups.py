"""Finite permutation groups materialized as multiplication tables.

Permutations are tuples of 0-based images.  Products compose on the right:
``(s*t)[i] = t[s[i]]``, i.e. first apply s, then t.  Conjugation is
``s^r = r^-1 s r``.  Elements are sorted lexicographically by image tuple,
so the identity has index 0.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .exact.fields import is_prime

DEFAULT_MAX_ORDER = 10080


def parse_cycles(text: str, degree: int | None = None) -> tuple:
    """Read cycle notation like ``"(1,2)(3,4)"`` (1-based) into an image tuple."""
    text = text.strip()
    cycles = re.findall(r"\(([^()]*)\)", text)
    if re.sub(r"\([^()]*\)", "", text).strip() not in ("", "e", "()"):
        raise ValueError(f"bad permutation literal {text!r}")
    pts = [[int(x) for x in c.replace(" ", "").split(",") if x] for c in cycles]
    top = max([max(c) for c in pts if c] + [degree or 0, 1])
    img = list(range(top))
    seen = set()
    for c in pts:
        if len(set(c)) != len(c) or seen & set(c):
            raise ValueError(f"bad permutation literal {text!r}")
        seen |= set(c)
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def cycle_str(perm) -> str:
    seen = set()
    out = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        out.append("(" + ",".join(str(k + 1) for k in cyc) + ")")
    return "".join(out) or "()"


def _compose(s, t):
    return tuple(t[i] for i in s)


class GroupTooLarge(ValueError):
    pass


class FiniteGroup:
    """A permutation group with its full multiplication table."""

    def __init__(self, elements, degree: int):
        self.elements = list(elements)
        self.degree = degree
        self.index = {e: i for i, e in enumerate(self.elements)}
        g = len(self.elements)
        dtype = np.int16 if g < 2**15 else np.int32
        table = np.empty((g, g), dtype=dtype)
        for i, s in enumerate(self.elements):
            for j, t in enumerate(self.elements):
                table[i, j] = self.index[_compose(s, t)]
        self.table = table
        self.identity = 0
        self.inverse = [int(np.nonzero(table[i] == 0)[0][0]) for i in range(g)]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, degree={self.degree})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, a: int, r: int) -> int:
        """a^r = r^-1 a r."""
        return self.mul(self.mul(self.inverse[r], a), r)

    def power(self, a: int, k: int) -> int:
        k %= self.element_order(a)
        out = 0
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def element_index(self, perm) -> int:
        perm = tuple(perm) + tuple(range(len(perm), self.degree))
        if perm not in self.index:
            raise ValueError("not a member")
        return self.index[perm]

    def parse(self, text: str) -> int:
        return self.element_index(parse_cycles(text, self.degree))

    def name(self, a: int) -> str:
        return cycle_str(self.elements[a])

    @cached_property
    def orders(self):
        out = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self.mul(x, a)
                k += 1
            out.append(k)
        return out

    def element_order(self, a: int) -> int:
        return self.orders[a]

    def p_part_split(self, a: int, p: int):
        """(p'-part, p-part) of a, both powers of a, commuting, multiplying to a."""
        o = self.element_order(a)
        pa = 1
        while o % (pa * p) == 0:
            pa *= p
        m = o // pa
        if m == 1:
            return 0, a
        if pa == 1:
            return a, 0
        # 1 = alpha*pa + beta*m
        alpha = pow(pa, -1, m)
        beta = (1 - alpha * pa) // m
        return self.power(a, alpha * pa), self.power(a, beta * m)

    def centralizer(self, a: int) -> list:
        if not 0 <= a < self.order:
            raise ValueError("not a member")
        return [r for r in range(self.order) if self.table[a, r] == self.table[r, a]]

    def subgroup_generators(self, members) -> list:
        """A small generating set of the subgroup with the given members."""
        members = sorted(members)
        gens = []
        span = {0}
        for m in members:
            if m not in span:
                gens.append(m)
                span = set(self.closure(gens))
        return gens

    def closure(self, gens) -> list:
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.mul(x, s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    @cached_property
    def classes(self) -> "ConjClassTable":
        return conjugacy_classes(self)

    def is_subgroup(self, members) -> bool:
        s = set(members)
        return 0 in s and all(self.mul(a, self.inverse[b]) in s for a in s for b in s)

    def right_coset_reps(self, sub) -> list:
        """Representatives r of the right cosets (sub) r, least element of each."""
        sub = list(sub)
        seen = set()
        reps = []
        for r in range(self.order):
            if r in seen:
                continue
            reps.append(r)
            seen.update(self.mul(h, r) for h in sub)
        return reps


@dataclass
class ConjClass:
    representative: int
    members: frozenset
    centralizer_order: int

    @property
    def size(self):
        return len(self.members)


@dataclass
class ConjClassTable:
    classes: list = field(default_factory=list)

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def class_of(self, a: int) -> ConjClass:
        for c in self.classes:
            if a in c.members:
                return c
        raise ValueError("not a member")


def generate(generators, degree: int | None = None, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Close a list of permutations (image tuples or cycle strings) under products."""
    gens = [parse_cycles(g) if isinstance(g, str) else tuple(g) for g in generators]
    deg = max([len(g) for g in gens] + [degree or 0, 1])
    gens = [tuple(g) + tuple(range(len(g), deg)) for g in gens]
    for g in gens:
        if sorted(g) != list(range(deg)):
            raise ValueError("generator is not a bijection")
    ident = tuple(range(deg))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = _compose(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > max_order:
                        raise GroupTooLarge("group too large")
        frontier = nxt
    return FiniteGroup(sorted(seen), deg)


def conjugacy_classes(G: FiniteGroup) -> ConjClassTable:
    done = set()
    out = []
    for a in range(G.order):
        if a in done:
            continue
        members = frozenset(G.conj(a, r) for r in range(G.order))
        done |= members
        out.append(ConjClass(min(members), members, G.order // len(members)))
    return ConjClassTable(out)


def p_prime_class_reps(G: FiniteGroup, p: int) -> list:
    if not is_prime(p):
        raise ValueError("invalid prime")
    return [c.representative for c in G.classes if math.gcd(G.element_order(c.representative), p) == 1]


def centralizer(G: FiniteGroup, a: int) -> list:
    return G.centralizer(a)
