"""Scenario orchestration: rational, colength and modular reports as exact JSON."""
from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import numpy as np

from . import colength as col
from . import modular as mod
from .exact.fields import rational_str
from .numberring import local_data, projectivity_check
from .scenario import Scenario
from .twisted import (TwistedRing, center_basis, center_dimension_untwisted, epsilon1, assumption_normal_cover)
from .wedderburn import (central_idempotents, central_plancherel_check, character_support_check, dimension_audits,
                         fourier_invert, idempotent_integrality, orthogonality_sum, plancherel_check, schur_expected,
                         schur_sum)

SECTIONS = ("rational", "colength", "modular", "verify")
DEFAULT_SEED = 0
ASSOC_TRIPLES = 500


def default_seed() -> int:
    env = os.environ.get("WREATHE_SEED")
    return int(env) if env not in (None, "") else DEFAULT_SEED


def exact(obj):
    """Every number as a canonical string; dict keys as strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, dict):
        return {str(k): exact(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [exact(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return exact(obj.tolist())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


class ScenarioReport:
    def __init__(self, data: dict, ok: bool):
        self.data = data
        self.ok = ok

    def to_json(self) -> str:
        return json.dumps(exact(self.data), sort_keys=True, indent=2) + "\n"

    def __getitem__(self, key):
        return self.data[key]


def _skip(reason):
    return f"skipped: {reason}"


# -- rational ---------------------------------------------------------------------


def rational_section(T: TwistedRing, W):
    R, G = T.R, T.G
    CB = center_basis(T)
    out = {
        "center_dim": len(CB),
        "center_basis": [T.serialize(z) for z in CB.elements],
        "center_labels": [{"class": G.name(nu), "coefficient": list(y)} for nu, y in CB.labels],
        "classes_of_N": center_dimension_untwisted(T),
        "epsilon1": T.serialize(epsilon1(T)),
        "normal_cover": assumption_normal_cover(T),
    }
    if W is None:
        out["blocks"] = _skip("no representation data")
        return out
    out["blocks"] = [{"index": b.index, "coefficients": b.K.describe(), "x": b.x, "c": b.c, "d": b.d, "r": b.r}
                     for b in W.blocks]
    if W.is_complete():
        out["audits"] = dimension_audits(W)
        out["central_idempotents"] = [T.serialize(e) for e in central_idempotents(W)]
    else:
        out["audits"] = _skip("missing blocks")
    return out


# -- per prime ----------------------------------------------------------------------


def _local(R, p, seed):
    ld = local_data(R, p, seed)
    verdict, reasons = projectivity_check(R, p, ld)
    return ld, {**ld.as_dict(), "projective": verdict, "projectivity_reasons": reasons}


def modular_section(R, p, seed, ld, W):
    G = R.G
    A = mod.build_residue_algebra(R, p, seed)
    _, _, kcodim = mod.kulshammer_spaces(A)
    J = mod.jacobson_radical(A, seed)
    Q = A if J.dim == 0 else mod.quotient_algebra(A, J)[0]
    z, parts = mod.brauer_z(R, p, rd=A.residue, seed=seed, detail=True)
    blocks = mod.block_decompose(Q, seed, check_radical=False)
    jacT = mod.jac_T_ideal(A)
    jacT_in_J = all(J.contains(v) for v in jacT.rows)
    # the residue twisted ring over T0 is the quotient by Jac(T) Lambda
    Q0 = A if jacT.dim == 0 else mod.quotient_algebra(A, jacT)[0]
    t0_semisimple = mod.jacobson_radical(Q0, seed, verify=False).dim == 0
    out = {
        "dimension": A.dim,
        "radical_dim": J.dim,
        "center_dim": mod.center(A).dim,
        "quotient_center_dim": mod.center(Q).dim,
        "z": z,
        "z_terms": {G.name(s): c for s, c in parts.items()},
        "kulshammer_codim": kcodim,
        "blocks": [b.as_dict() for b in blocks],
        "block_count": len(blocks),
        "jac_T_dim": jacT.dim,
        "jac_T_in_radical": jacT_in_J,
        "residue_T0_twisted_semisimple": t0_semisimple,
        "semisimplicity": {"predicted": ld.e == 1 and R.n % p != 0, "observed": J.dim == 0},
    }
    M = mod.principal_residue_module(A)
    if p ** M.dim <= mod.SPIN_BOUND:
        out["principal_residue_simple"] = mod.is_simple(M)
    else:
        out["principal_residue_simple"] = _skip("module too large for exhaustive check")
    out["principal_residue_dim"] = M.dim
    bn = {}
    if W is not None:
        for b in W.blocks:
            try:
                bn[str(b.index)] = mod.brauer_nesbitt_check(R, p, b, ld.t, A)
            except ValueError as exc:
                bn[str(b.index)] = {"status": _skip(str(exc))}
    out["brauer_nesbitt"] = bn if bn else _skip("no representation data")
    return out


def block_invariants(R, W, p, overrides):
    """Colength inputs: forced in the faithful case, else read from blocks and [blocks] overrides."""
    if W is None or not W.is_complete():
        if R.n == 1:
            return col.faithful_invariants(R)
        raise ValueError("colength needs a faithful action or complete representation data")
    out = []
    for b in W.blocks:
        ov = overrides.get(b.index, {})
        out.append(col.BlockInvariants.from_block(b, p, ov.get("delta_S"), ov.get("delta_Z")))
    return out


def colength_section(R, p, ld, W, overrides):
    if not R.K_is_Q:
        return _skip("fixed field is larger than Q")
    try:
        blocks = block_invariants(R, W, p, overrides)
    except ValueError as exc:
        return _skip(str(exc))
    out = {"invariants": [b.as_dict() for b in blocks]}
    out["formula"] = col.wedderburn_colength(R.g, R.h, R.n, None, ld.delta, blocks, p)
    ok, details = col.bound_check(blocks, R.g, ld.t, p, R.h, R.n)
    out["bound"] = {"ok": ok, "blocks": details}
    terms = col.class_terms(R, p)
    out["central_formula"] = col.central_colength(R, p, blocks, terms)
    out["class_terms"] = [{"class": R.G.name(nu), "delta": d, "v_index": v, "h": h} for nu, d, v, h in terms]
    have_w = W is not None and W.is_complete()
    if R.n == 1:
        vals = col.embedding_valuations(R, p)
        out["oracle"] = int(sum(vals))
        # experimental: per-quasiblock colength; a faithful action has one quasiblock
        out["experimental_quasiblocks"] = [{"block": 1, "colength": out["oracle"]}]
    elif have_w:
        out["oracle"], vals = col.block_embedding(W, p)
    else:
        vals = None
        out["oracle"] = _skip("no representation data")
    if vals is not None:
        a_ok, a_bound, _ = col.annihilation_check(R, p, vals=vals)
        out["annihilation"] = {"ok": a_ok, "bound": a_bound, "valuations": sorted(vals)}
    if have_w:
        try:
            chain = col.five_length_chain(W, p)
            out["chain"] = chain
        except ValueError as exc:
            out["chain"] = _skip(str(exc))
        out["central_oracle"] = col.central_embedding_colength(W, p)
    else:
        out["central_oracle"] = _skip("no representation data")
    return out


def prime_checks(R, p, ld, entry):
    checks = {
        "e f d = deg mu": ld.e * ld.f * ld.d == R.m,
    }
    if ld.t is not None:
        checks["t = 0 iff e = 1"] = (ld.t == 0) == (ld.e == 1)
        checks["delta = 0 iff t = 0"] = (ld.delta == 0) == (ld.t == 0)
    m = entry.get("modular")
    if isinstance(m, dict):
        checks["quotient center dim = z = Kulshammer codim"] = m["quotient_center_dim"] == m["z"] == m["kulshammer_codim"]
        split = all(b["split"] for b in m["blocks"])
        checks["block count at most z"] = m["block_count"] <= m["z"]
        checks["block count equals z iff all blocks split"] = (m["block_count"] == m["z"]) == split
        checks["semisimplicity prediction"] = m["semisimplicity"]["predicted"] == m["semisimplicity"]["observed"]
        checks["Jac(T) Lambda in radical"] = m["jac_T_in_radical"]
        if m["residue_T0_twisted_semisimple"]:
            checks["radical equals Jac(T) Lambda"] = m["jac_T_in_radical"] and m["jac_T_dim"] == m["radical_dim"]
        if isinstance(m["brauer_nesbitt"], dict):
            for i, res in m["brauer_nesbitt"].items():
                checks[f"Brauer-Nesbitt block {i}"] = res["status"] != "failed"
                if "bound" in res:
                    checks[f"bound block {i}"] = res["bound"]
    c = entry.get("colength")
    if isinstance(c, dict):
        checks["colength bound"] = c["bound"]["ok"]
        if not isinstance(c["oracle"], str):
            checks["colength formula equals oracle"] = c["formula"] == c["oracle"]
        if "annihilation" in c:
            checks["annihilation"] = c["annihilation"]["ok"]
        if isinstance(c.get("chain"), dict):
            for name, ok in c["chain"]["checks"].items():
                checks[f"chain: {name}"] = ok
        if not isinstance(c["central_oracle"], str):
            checks["central colength formula equals oracle"] = c["central_formula"] == c["central_oracle"]
    return checks


def prime_entry(sc: Scenario, p: int, sections, seed: int):
    """Everything computed for one prime; runs in a worker process."""
    R = sc.ring([p])
    W = sc.wedderburn(TwistedRing(R))
    ld, local = _local(R, p, seed)
    entry = {"local": local}
    if "modular" in sections:
        entry["modular"] = modular_section(R, p, seed, ld, W)
    if "colength" in sections:
        entry["colength"] = colength_section(R, p, ld, W, sc.block_overrides)
    if "verify" in sections:
        entry["checks"] = prime_checks(R, p, ld, entry)
    return entry


# -- global identity suites -------------------------------------------------------


def _sparse_element(T, rnd, terms=2):
    L = T.L
    d = {}
    for _ in range(terms):
        s = rnd.randrange(T.g)
        y = tuple(Fraction(rnd.randint(-5, 5), rnd.randint(1, 3)) for _ in range(T.m))
        d[s] = L.add(d.get(s, L.zero), y)
    return T.element(d)


def identity_suites(T: TwistedRing, W, primes, seed: int):
    """{suite: (passed, total)} over the rational identities."""
    rnd = random.Random(seed)
    suites = {}

    def record(name, results):
        results = list(results)
        suites[name] = (sum(1 for r in results if r), len(results))

    def assoc():
        a, b, c = (_sparse_element(T, rnd) for _ in range(3))
        return (a * b) * c == a * (b * c)

    record("associativity", (assoc() for _ in range(ASSOC_TRIPLES)))
    CB = center_basis(T)
    record("center basis is central", (T.is_central(z) for z in CB.elements))
    record("center dimension equals classes of N", [len(CB) == center_dimension_untwisted(T)])
    if W is None or not W.is_complete():
        return suites
    B = T.basis()
    record("plancherel", (plancherel_check(W, a, b)[2] for a in B for b in B))
    record("fourier roundtrip", (fourier_invert(W, W.omega_all(b)) == b for b in B))
    idx = [(i, a, b) for i, blk in enumerate(W.blocks, 1) for a in range(blk.x) for b in range(blk.x)]
    record("schur relations", (schur_sum(W, *u, *v) == schur_expected(W, *u, *v) for u in idx for v in idx))
    record("orthogonality", (orthogonality_sum(W, i, j) == (T.g * W.blocks[i - 1].c if i == j else 0)
                             for i in range(1, W.k + 1) for j in range(1, W.k + 1)))
    record("central plancherel", (central_plancherel_check(W, a, b)[2] for a in CB.elements for b in CB.elements))
    record("character support", [character_support_check(W)])
    try:
        eps = central_idempotents(W, verify=True)
        eps_ok = True
    except ValueError:
        eps, eps_ok = None, False
    record("central idempotents", [eps_ok])
    try:
        dimension_audits(W, primes)
        audit_ok = True
    except AssertionError:
        audit_ok = False
    record("dimension audits", [audit_ok])
    if eps_ok:
        ints = []
        for p in primes:
            if T.R.n % p:
                ints.append(idempotent_integrality(W, eps, p, local_data(T.R, p).s))
        if ints:
            record("idempotent integrality", ints)
    return suites


# -- orchestration ------------------------------------------------------------------


def normalize_sections(sections):
    if sections is None:
        return set(SECTIONS)
    sections = set(sections)
    bad = sections - set(SECTIONS)
    if bad:
        raise ValueError(f"unknown sections: {', '.join(sorted(bad))}")
    return sections


def run(sc: Scenario, sections=None, seed: int | None = None, primes=None, jobs: int | None = None) -> ScenarioReport:
    sections = normalize_sections(sections)
    seed = default_seed() if seed is None else seed
    primes = list(sc.primes if primes is None else primes)
    if "verify" in sections:
        sections |= {"rational", "colength", "modular"}
    from .scenario import validate

    R = validate(sc, primes)
    T = TwistedRing(R)
    W = sc.wedderburn(T)
    data = {
        "scenario": sc.name,
        "seed": seed,
        "sections": sorted(sections),
        "ring": {"g": R.g, "h": R.h, "n": R.n, "m": R.m, "mu": list(R.L.mu), "K_is_Q": R.K_is_Q,
                 "kernel": [R.G.name(s) for s in R.kernel]},
    }
    if "rational" in sections:
        data["rational"] = rational_section(T, W)
    per_prime = sections & {"modular", "colength", "verify"}
    if per_prime and not primes:
        data["primes"] = _skip("no primes")
    elif per_prime:
        jobs = min(len(primes), os.cpu_count() or 1) if jobs is None else jobs
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                futs = [ex.submit(prime_entry, sc, p, sections, seed) for p in primes]
                entries = [f.result() for f in futs]
        else:
            entries = [prime_entry(sc, p, sections, seed) for p in primes]
        data["primes"] = {str(p): e for p, e in zip(primes, entries)}
    ok = True
    if "verify" in sections:
        suites = identity_suites(T, W, primes, seed)
        failures = [name for name, (passed, total) in suites.items() if passed != total]
        if isinstance(data.get("primes"), dict):
            for p, e in data["primes"].items():
                failures += [f"p={p}: {name}" for name, good in e["checks"].items() if not good]
        data["verify"] = {"suites": {k: {"passed": a, "total": b} for k, (a, b) in suites.items()},
                          "failures": failures, "ok": not failures}
        ok = not failures
    return ScenarioReport(data, ok)
