"""Acceptance criteria 1-10; each test prints one PASS/FAIL line."""
from fractions import Fraction

import pytest

from wreathe import constructions as C
from wreathe import modular as mod
from wreathe.colength import annihilation_check, direct_embedding_colength, faithful_invariants, wedderburn_colength
from wreathe.numberring import local_data
from wreathe.report import identity_suites, run
from wreathe.scenario import parse_scenario, shipped, shipped_names
from wreathe.twisted import TwistedRing, center_basis, center_dimension_untwisted, epsilon1
from wreathe.wedderburn import WedderburnData, dimension_audits


@pytest.fixture
def criterion(capsys, request):
    def report(n, ok, detail=""):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
        assert ok, detail
    return report


@pytest.fixture(scope="module")
def modular_reports():
    """Modular and colength sections for every shipped scenario with primes."""
    out = {}
    for name in shipped_names():
        sc = parse_scenario(shipped(name))
        if sc.primes:
            out[name] = run(sc, ["modular", "colength"], seed=0)
    return out


def pairs(reports):
    for name, rep in sorted(reports.items()):
        for p, entry in rep["primes"].items():
            yield name, int(p), entry


def test_criterion_1_exi26_rational(criterion):
    T, blocks = C.exi26_data()
    G = T.G
    b = G.parse("(1,2,3)")
    c = G.inv(b)
    i = (0, 1)
    CB = center_basis(T)
    expected = [T.one(), T.group_element(b) + T.group_element(c), T.element({b: i}) - T.element({c: i})]
    got = set(CB.elements) | {-z for z in CB.elements}
    basis_ok = len(CB) == 3 and all(z in got for z in expected)
    z = expected[2]
    square_ok = z * z == T.element({0: 2, b: -1, c: -1})
    third = Fraction(1, 3)
    eps_ok = epsilon1(T) == T.element({0: third, b: third, c: third})
    audit = dimension_audits(WedderburnData(T, blocks))
    dims_ok = (audit["gh"] == 12 and audit["block_dims"] == [4, 8] and audit["center_dims"] == [1, 2]
               and audit["classes_of_N"] == 3 == center_dimension_untwisted(T))
    criterion(1, basis_ok and square_ok and eps_ok and dims_ok,
              f"center basis {basis_ok}, square {square_ok}, eps_1 {eps_ok}, 12 = 4 + 8 and 1 + 2 = 3 {dims_ok}")


def test_criterion_2_exi27_quaternions(criterion):
    T, _ = C.exi27_data()
    G = T.G
    i, j = G.parse(C.Q8_GENERATORS[0]), G.parse(C.Q8_GENERATORS[1])
    e, I, J = C.exi27_idempotent(T, i, j)
    minus_e = -e
    checks = {
        "e^2 = e": e * e == e and e != T.zero(),
        "I, J in eAe": e * I * e == I and e * J * e == J,
        "I^2 = -e": I * I == minus_e,
        "J^2 = -e": J * J == minus_e,
        "IJ = -JI": I * J == -(J * I) and I * J != T.zero(),
    }
    criterion(2, all(checks.values()), ", ".join(f"{k} {v}" for k, v in checks.items()))


def test_criterion_3_exi25_identities(criterion):
    sc = parse_scenario(shipped("exi25"))
    T = TwistedRing(sc.ring())
    W = sc.wedderburn(T)
    suites = identity_suites(T, W, [3], seed=0)
    names = ["plancherel", "fourier roundtrip", "schur relations", "orthogonality", "central plancherel"]
    ok = all(suites[n][0] == suites[n][1] > 0 for n in names)
    full = suites["plancherel"][1] == T.dim ** 2 and suites["fourier roundtrip"][1] == T.dim
    criterion(3, ok and full, ", ".join(f"{n} {suites[n][0]}/{suites[n][1]}" for n in names))


def test_criterion_4_exmod1(criterion, modular_reports):
    m2 = modular_reports["exmod1"]["primes"]["2"]["modular"]
    m3 = modular_reports["exmod1"]["primes"]["3"]["modular"]
    ok2 = m2["block_count"] == 2
    blocks3 = m3["blocks"]
    ok3 = (m3["z"] == 1 and len(blocks3) == 1 and m3["principal_residue_simple"] is True
           and blocks3[0]["simple_dim"] == m3["principal_residue_dim"] == 2)
    criterion(4, ok2 and ok3, f"p=2 blocks {m2['block_count']}; p=3 z {m3['z']}, "
              f"simple module dim {blocks3[0]['simple_dim']} = dim T0 {m3['principal_residue_dim']}")


def test_criterion_5_exmod2(criterion, modular_reports):
    P = modular_reports["exmod2"]["primes"]
    z = {p: e["modular"]["z"] for p, e in P.items()}
    t3 = sorted((b["simple_dim"], b["endo_field"], b["center_degree"]) for b in P["3"]["modular"]["blocks"])
    t31 = sorted((b["simple_dim"], b["split"]) for b in P["31"]["modular"]["blocks"])
    ok = (z == {"2": 1, "3": 4, "31": 5}
          and t3 == [(6, "F_3", 1), (6, "F_3", 1), (12, "F_3^2", 2)]
          and t31 == [(3, True)] * 4 + [(6, True)])
    criterion(5, ok, f"z {z}; p=3 {t3}; p=31 {t31}")


def test_criterion_6_triple_equality(criterion, modular_reports):
    bad = []
    count = 0
    for name, p, entry in pairs(modular_reports):
        m = entry["modular"]
        count += 1
        if not m["quotient_center_dim"] == m["z"] == m["kulshammer_codim"]:
            bad.append(f"{name}@{p}")
    criterion(6, not bad and count >= 6, f"{count} scenario/prime pairs" + (f", failing {bad}" if bad else ""))


def test_criterion_7_colength_oracle(criterion):
    results = []
    for R, p in [(C.gauss_c2_ring([2]), 2), (C.gauss_c2_ring([3]), 3), (C.exmod2_s3_ring([31]), 31)]:
        formula = wedderburn_colength(R.g, R.h, R.n, None, local_data(R, p).delta, faithful_invariants(R), p)
        oracle = direct_embedding_colength(R, p)
        results.append((p, formula, oracle, annihilation_check(R, p)[0]))
    ok = [(f, o) for _, f, o, _ in results] == [(2, 2), (0, 0), (9, 9)] and all(r[3] for r in results)
    criterion(7, ok, "; ".join(f"p={p}: {f} = {o}, annihilation {a}" for p, f, o, a in results))


def test_criterion_8_semisimplicity(criterion, modular_reports):
    bad = []
    count = 0
    for name, p, entry in pairs(modular_reports):
        ss = entry["modular"]["semisimplicity"]
        ld = entry["local"]
        count += 1
        if ss["predicted"] != ss["observed"] or (ld["t"] == 0) != (ld["e"] == 1):
            bad.append(f"{name}@{p}")
    criterion(8, not bad and count >= 6, f"{count} scenario/prime pairs" + (f", failing {bad}" if bad else ""))


def test_criterion_9_brauer_nesbitt(criterion):
    T, blocks = C.s3_untwisted_data([2])
    res = mod.brauer_nesbitt_check(T.R, 2, blocks[2])
    ok = res["hypothesis"] and res["v_x"] == res["v_g"] + res["t"] and res["simple"] is True
    criterion(9, ok, f"v(x) = {res['v_x']}, v(g) + t = {res['v_g'] + res['t']}, reduction simple {res['simple']}")


def test_criterion_10_determinism(criterion):
    same, verified = {}, {}
    for name in shipped_names():
        sc = parse_scenario(shipped(name))
        first, second = run(sc, seed=0), run(sc, seed=0)
        same[name] = first.to_json() == second.to_json()
        verified[name] = first.ok
    criterion(10, all(same.values()) and all(verified.values()),
              f"{sum(same.values())}/{len(same)} scenarios byte-identical, {sum(verified.values())} verify cleanly")
