"""Line-oriented scenario files.

Sections:

    [group]            degree, then one generator cycle string per line
    [field]            mu as ascending coefficients (rationals as a/b)
    [action]           <generator> = <polynomial or rational function in X, or [c0 c1 ...]>
    [primes]           whitespace separated primes (may be empty)
    [representation.i] "principal", or "coefficients Q | field c0 c1 ... | quaternion a b",
                       "size x", then "<generator> = <matrix>" and "gamma = <matrix>"
    [blocks]           "<i> <key>=<value> ..." overrides for colength invariants

A matrix is a nested JSON array of rational strings ("3/2"); an entry of a
field or quaternion block is itself an array of its coordinates.  Lines starting with "#" are comments; "name <id>" may precede the
first section.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .exact.fields import parse_rational, rational_str
from .groups import generate
from .numberring import build_and_validate, dedekind_pmaximal
from .twisted import TwistedRing
from .wedderburn import QQ_ALGEBRA, FieldAlgebra, QuaternionAlgebra, WedderburnData, block_from_generators, principal_block

SECTIONS = ("group", "field", "action", "primes", "blocks")


class ScenarioError(ValueError):
    pass


@dataclass
class RepresentationSpec:
    index: int
    principal: bool = False
    coefficients: str = "Q"
    size: int = 0
    generators: dict = field(default_factory=dict)  # cycle string -> matrix of entry tuples
    gamma: list | None = None

    def algebra(self):
        words = self.coefficients.split()
        if words[0] == "Q":
            return QQ_ALGEBRA
        if words[0] == "field":
            return FieldAlgebra([parse_rational(w) for w in words[1:]])
        if words[0] == "quaternion" and len(words) == 3:
            return QuaternionAlgebra(parse_rational(words[1]), parse_rational(words[2]))
        raise ValueError(f"unknown coefficients {self.coefficients!r}")


@dataclass
class Scenario:
    name: str
    degree: int
    generators: list
    mu: list
    action: list  # [(cycle string, expression string)]
    primes: list
    representations: dict = field(default_factory=dict)
    block_overrides: dict = field(default_factory=dict)  # block index -> {key: int}
    source: str = ""

    # -- building -------------------------------------------------------------
    def group(self):
        return generate(self.generators, degree=self.degree)

    def ring(self, primes=None):
        G = self.group()
        action = {G.parse(c): _action_value(e) for c, e in self.action}
        primes = self.primes if primes is None else primes
        return build_and_validate(self.mu, G, action, primes)

    def wedderburn(self, T: TwistedRing):
        """WedderburnData from the representation sections, or None."""
        if not self.representations:
            return None
        blocks = []
        G = T.G
        for i in sorted(self.representations):
            spec = self.representations[i]
            if spec.principal:
                blocks.append(principal_block(T, [G.parse(c) for c in self.generators]))
                continue
            K = spec.algebra()
            mats = {G.parse(c): M for c, M in spec.generators.items()}
            gamma = spec.gamma
            if gamma is None:
                if T.m != 1:
                    raise ScenarioError(f"{self.name} [representation.{i}]: gamma is required")
                gamma = [[K.zero] * spec.size for _ in range(spec.size)]
            blocks.append(block_from_generators(T, K, spec.size, mats, gamma, index=i))
        return WedderburnData(T, blocks)

    # -- printing ---------------------------------------------------------------
    def to_text(self) -> str:
        out = [f"name {self.name}", "", "[group]", f"degree {self.degree}"]
        out += list(self.generators)
        out += ["", "[field]", " ".join(rational_str(c) for c in self.mu)]
        out += ["", "[action]"] + [f"{c} = {e}" for c, e in self.action]
        out += ["", "[primes]", " ".join(str(p) for p in self.primes)]
        for i in sorted(self.representations):
            spec = self.representations[i]
            out += ["", f"[representation.{i}]"]
            if spec.principal:
                out.append("principal")
                continue
            out += [f"coefficients {spec.coefficients}", f"size {spec.size}"]
            for c, M in spec.generators.items():
                out.append(f"{c} = {format_matrix(M)}")
            if spec.gamma is not None:
                out.append(f"gamma = {format_matrix(spec.gamma)}")
        if self.block_overrides:
            out += ["", "[blocks]"]
            for i in sorted(self.block_overrides):
                kv = " ".join(f"{k}={v}" for k, v in sorted(self.block_overrides[i].items()))
                out.append(f"{i} {kv}")
        return "\n".join(out) + "\n"

    def key(self):
        """Comparable summary used for round-trip equality."""
        reps = {i: (s.principal, s.coefficients, s.size, {c: _canon(M) for c, M in s.generators.items()},
                    None if s.gamma is None else _canon(s.gamma)) for i, s in self.representations.items()}
        return (self.name, self.degree, tuple(self.generators), tuple(Fraction(c) for c in self.mu),
                tuple(self.action), tuple(self.primes), reps, {i: dict(v) for i, v in self.block_overrides.items()})

    def __eq__(self, other):
        return isinstance(other, Scenario) and self.key() == other.key()


def _canon(M):
    return tuple(tuple(tuple(Fraction(c) for c in e) for e in row) for row in M)


def _action_value(expr: str):
    expr = expr.strip()
    if expr.startswith("["):
        return [parse_rational(w) for w in expr.strip("[]").replace(",", " ").split()]
    return expr


def format_entry(e):
    if len(e) == 1:
        return rational_str(Fraction(e[0]))
    return [rational_str(Fraction(c)) for c in e]


def format_matrix(M):
    return json.dumps([[format_entry(e) for e in row] for row in M])


def parse_matrix(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad matrix: {exc.msg}") from None
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix must be a nested array")
    rows = []
    for r in data:
        row = []
        for e in r:
            coords = e if isinstance(e, list) else [e]
            if not coords:
                raise ValueError("empty matrix entry")
            row.append(tuple(parse_rational(str(c)) for c in coords))
        rows.append(row)
    if any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


_HEADER = re.compile(r"^\[([a-z]+)(?:\.(\d+))?\]$")


def parse_text(text: str, source: str = "<string>") -> Scenario:
    name = os.path.splitext(os.path.basename(source))[0] if source != "<string>" else "scenario"
    section = None
    rep = None
    seen = set()
    degree, gens, mu, action, primes = None, [], None, [], []
    reps, blocks = {}, {}

    def fail(lineno, msg):
        where = f"[{section}]" if section else "header"
        raise ScenarioError(f"{source}:{lineno} {where}: {msg}")

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            kind, idx = m.group(1), m.group(2)
            if kind == "representation" and idx is not None:
                section = f"representation.{idx}"
                rep = RepresentationSpec(int(idx))
                if rep.index in reps:
                    fail(lineno, "duplicate representation")
                reps[rep.index] = rep
            elif kind in SECTIONS and idx is None:
                section = kind
                if kind in seen:
                    fail(lineno, "duplicate section")
            else:
                section = line.strip("[]")
                fail(lineno, "unknown section")
            seen.add(section)
            continue
        try:
            if section is None:
                key, _, val = line.partition(" ")
                if key != "name" or not val.strip():
                    fail(lineno, "expected 'name <id>' or a section header")
                name = val.strip()
            elif section == "group":
                if line.startswith("degree"):
                    degree = int(line.split()[1])
                else:
                    gens.append(line)
            elif section == "field":
                if mu is not None:
                    fail(lineno, "mu given twice")
                mu = [parse_rational(w) for w in line.replace(",", " ").split()]
            elif section == "action":
                lhs, eq, rhs = line.partition("=")
                if not eq:
                    fail(lineno, "expected '<generator> = <expression>'")
                action.append((lhs.strip(), rhs.strip()))
            elif section == "primes":
                primes.extend(int(w) for w in line.replace(",", " ").split())
            elif section == "blocks":
                words = line.split()
                blocks[int(words[0])] = {k: int(v) for k, v in (w.split("=") for w in words[1:])}
            else:
                if line == "principal":
                    rep.principal = True
                elif line.startswith("coefficients"):
                    rep.coefficients = line.split(None, 1)[1]
                elif line.startswith("size"):
                    rep.size = int(line.split()[1])
                else:
                    lhs, eq, rhs = line.partition("=")
                    if not eq:
                        fail(lineno, "expected '<generator> = <matrix>'")
                    M = parse_matrix(rhs)
                    if lhs.strip() == "gamma":
                        rep.gamma = M
                    else:
                        rep.generators[lhs.strip()] = M
        except ScenarioError:
            raise
        except (ValueError, IndexError, ZeroDivisionError) as exc:
            fail(lineno, f"syntax error: {exc}")
    for sec in ("group", "field", "action"):
        if sec not in seen:
            raise ScenarioError(f"{source}: missing section [{sec}]")
    if mu is None or not gens:
        raise ScenarioError(f"{source}: group generators and mu are required")
    if degree is None:
        degree = max(max(int(x) for x in re.findall(r"\d+", c)) if re.findall(r"\d+", c) else 1 for c in gens)
    for i, spec in reps.items():
        if not spec.principal and spec.size < 1:
            raise ScenarioError(f"{source} [representation.{i}]: size missing")
    return Scenario(name, degree, gens, mu, action, primes, reps, blocks, source)


def validate(sc: Scenario, primes=None):
    """Build the ring (raising numberring errors with the section named) and check p-maximality."""
    primes = sc.primes if primes is None else primes
    try:
        R = sc.ring(primes)
    except ValueError as exc:
        raise ScenarioError(f"{sc.source or sc.name} [action]: {exc}") from exc
    for p in primes:
        if not dedekind_pmaximal(sc.mu, p):
            raise ScenarioError(f"{sc.source or sc.name} [primes]: not p-maximal at {p}")
    return R


def parse_scenario(path) -> Scenario:
    with open(path) as fh:
        text = fh.read()
    sc = parse_text(text, str(path))
    validate(sc)
    return sc


def shipped(name: str) -> str:
    """Path of a scenario shipped with the package."""
    ref = resources.files("wreathe") / "scenarios" / f"{name}.scn"
    return str(ref)


def shipped_names():
    folder = resources.files("wreathe") / "scenarios"
    return sorted(p.name[:-4] for p in folder.iterdir() if p.name.endswith(".scn"))
