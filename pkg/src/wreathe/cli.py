"""Command line: report, verify and explain for scenario files."""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .exact.fields import valuation
from .report import SECTIONS, default_seed, exact, run
from .scenario import ScenarioError, parse_scenario, shipped, shipped_names

EXIT_OK, EXIT_FAILED, EXIT_ERROR = 0, 1, 2


def _scenario_path(arg: str) -> str:
    if os.path.exists(arg):
        return arg
    if arg in shipped_names():
        return shipped(arg)
    raise ScenarioError(f"{arg}: no such scenario file (shipped: {', '.join(shipped_names())})")


def _int_list(text):
    return [int(w) for w in text.replace(",", " ").split()]


def _v(x, p):
    return valuation(Fraction(x), p)


def explain(report, section: str) -> str:
    """The formulas behind one report section, with the inputs that were used."""
    d = report.data
    ring = d["ring"]
    g, h, n = ring["g"], ring["h"], ring["n"]
    out = [f"scenario {d['scenario']}: g = {g}, h = {h}, n = {n}, deg mu = {ring['m']}"]
    primes = d.get("primes") if isinstance(d.get("primes"), dict) else {}
    if section == "rational":
        r = d["rational"]
        out.append("dim_K Z(Lambda) = sum over G-classes of nu in N of dim_K L_nu, L_nu fixed by C_G(nu)")
        out.append(f"  center dim = {r['center_dim']}; classes of N = {r['classes_of_N']}")
        out.append("eps_1 = (1/n) sum_{nu in N} nu")
        out.append(f"  eps_1 = {exact(r['epsilon1'])}")
        if isinstance(r["blocks"], list):
            out.append("gh = sum_i r_i x_i^2")
            terms = " + ".join(f"{b['r']}*{b['x']}^2" for b in r["blocks"])
            out.append(f"  {g * h} = {terms}")
    elif section == "modular":
        for p, e in primes.items():
            m = e["modular"]
            ld = e["local"]
            out.append(f"p = {p}:")
            terms = ", ".join(f"{s}: {c}" for s, c in m["z_terms"].items())
            out.append(f"  z = sum over p-regular classes sigma of codim V_sigma = {m['z']}  ({terms})")
            out.append(f"  dim A/bLCP = {m['kulshammer_codim']}; dim Z(A/J) = {m['quotient_center_dim']}")
            blocks = ", ".join(f"{b['simple_dim']} over {b['endo_field']}" for b in m["blocks"])
            out.append(f"  blocks (simple module dim over endomorphism field): {blocks}")
            out.append(f"  semisimple iff e = 1 and p does not divide n: e = {ld['e']}, n = {n}"
                       f" -> {m['semisimplicity']['predicted']}; radical dim {m['radical_dim']}")
    elif section == "colength":
        for p, e in primes.items():
            c = e["colength"]
            out.append(f"p = {p}:")
            if isinstance(c, str):
                out.append(f"  {c}")
                continue
            pi = int(p)
            delta = e["local"]["delta"]
            out.append("  l = (1/2)(g (delta + v(n) h) - sum_i x_i^2 (delta_Si + v(x_i d_i / h) r_i))")
            out.append(f"    delta = {delta}, v(n) = {_v(n, pi)}")
            for i, b in enumerate(c["invariants"], 1):
                out.append(f"    block {i}: x = {b['x']}, d = {b['d']}, r = {b['r']}, delta_S = {b['delta_S']},"
                           f" v(x d / h) = {_v(Fraction(b['x'] * b['d'], h), pi)}")
            out.append(f"    formula = {c['formula']}; oracle = {exact(c['oracle'])}")
            out.append("  l_Z = (1/2)(sum_nu (delta_nu + v([N : C_N(nu)]) h_nu) - sum_i (delta_Zi + v(x_i^2 d_i^2 / (g h)) c_i))")
            for t in c["class_terms"]:
                out.append(f"    class {t['class']}: delta_nu = {t['delta']}, v(index) = {t['v_index']}, h_nu = {t['h']}")
            out.append(f"    formula = {c['central_formula']}; oracle = {exact(c['central_oracle'])}")
    elif section == "verify":
        v = d["verify"]
        for name, s in sorted(v["suites"].items()):
            out.append(f"  {name}: {s['passed']}/{s['total']}")
        for p, e in primes.items():
            good = sum(1 for ok in e["checks"].values() if ok)
            out.append(f"  p = {p}: {good}/{len(e['checks'])} checks")
        out.append("  failures: " + (", ".join(v["failures"]) if v["failures"] else "none"))
    else:
        raise ValueError(f"unknown section {section!r}")
    return "\n".join(out) + "\n"


def build_parser():
    ap = argparse.ArgumentParser(prog="wreathe", description="Exact reports for twisted group rings of Galois actions.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--scenario", required=True, help="scenario file, or the name of a shipped scenario")
        sp.add_argument("--primes", type=_int_list, help="override the scenario's primes, e.g. 2,3")
        sp.add_argument("--seed", type=int, help="seed for randomized steps (default: WREATHE_SEED or 0)")
        sp.add_argument("--sections", help=f"comma separated subset of {','.join(SECTIONS)}")
        sp.add_argument("--out", help="write the output here instead of stdout")
        sp.add_argument("--jobs", type=int, help="worker processes for per-prime work")

    common(sub.add_parser("report", help="write the JSON report"))
    common(sub.add_parser("verify", help="run every identity suite; exit 1 on any failure"))
    ex = sub.add_parser("explain", help="print the formulas of one section with their inputs")
    ex.add_argument("section", choices=SECTIONS)
    common(ex)
    sub.add_parser("list", help="list shipped scenarios")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        print("\n".join(shipped_names()))
        return EXIT_OK
    try:
        sc = parse_scenario(_scenario_path(args.scenario))
        seed = default_seed() if args.seed is None else args.seed
        sections = None if args.sections is None else [s.strip() for s in args.sections.split(",") if s.strip()]
        if args.command == "verify":
            sections = (sections or []) + ["verify"]
        elif args.command == "explain":
            sections = [args.section] + (["verify"] if args.section == "verify" else [])
        report = run(sc, sections, seed, args.primes, args.jobs)
        text = explain(report, args.section) if args.command == "explain" else report.to_json()
    except (ScenarioError, ValueError) as exc:
        print(f"wreathe: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not report.ok:
        print("wreathe: verification failed: " + ", ".join(report["verify"]["failures"]), file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK
