import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest

from wreathe import constructions as C
from wreathe.cli import main
from wreathe.report import run
from wreathe.scenario import ScenarioError, parse_scenario, parse_text, shipped, shipped_names

HERE = os.path.dirname(__file__)
BAD = os.path.join(HERE, "fixtures", "bad_action.scn")


@pytest.mark.parametrize("name", shipped_names())
def test_round_trip(name):
    sc = parse_scenario(shipped(name))
    again = parse_text(sc.to_text(), sc.source)
    assert again == sc
    assert again.to_text() == sc.to_text()


def test_exmod2_file():
    sc = parse_scenario(shipped("exmod2"))
    assert sc.mu == [1, -3, 7, -9, 7, -3, 1]
    assert sc.primes == [2, 3, 31]
    assert dict(sc.action) == {"(1,2)": "1 - X", "(1,2,3,4)": "1/X"}
    R = sc.ring()
    assert R.g == 24 and R.h == 6 and R.n == 4


def test_shipped_matrices_match_constructions():
    sc = parse_scenario(shipped("s3_untwisted"))
    T, blocks = C.s3_untwisted_data()
    W = sc.wedderburn(T)
    for mine, theirs in zip(W.blocks, blocks):
        assert mine.images == theirs.images


def test_bad_action_fixture():
    with pytest.raises(ScenarioError, match=r"\[action\]: not an automorphism"):
        parse_scenario(BAD)


@pytest.mark.parametrize("text,msg", [
    ("[group]\n(1,2)\n[weird]\n", r"unknown section"),
    ("[group]\n(1,2)\n[group]\n", r"duplicate section"),
    ("[group]\n(1,2)\n[field]\n1 0 1\n", r"missing section \[action\]"),
    ("[group]\n(1,2)\n[field]\n1 0 1\n[action]\n(1,2) -X\n", r":6 \[action\]: expected"),
    ("[group]\n(1,2)\n[field]\n1 0 1\n[action]\n(1,2) = -X\n[representation.1]\nsize 1\n(1,2) = [[1\n",
     r"bad matrix"),
])
def test_parse_diagnostics(text, msg):
    with pytest.raises(ScenarioError, match=msg):
        parse_text(text, "t.scn")


def test_not_p_maximal(tmp_path):
    text = open(shipped("gauss_c2")).read().replace("[primes]\n2 3", "[primes]\n2 3")
    # Z[2i] is not 2-maximal: mu = X^2 + 4
    text = text.replace("1 0 1", "4 0 1").replace("= -X", "= -X")
    path = tmp_path / "z2i.scn"
    path.write_text(text)
    with pytest.raises(ScenarioError, match=r"\[primes\]: not p-maximal at 2"):
        parse_scenario(path)


def test_empty_primes_skip():
    sc = parse_scenario(shipped("exi26"))
    assert sc.primes == []
    rep = run(sc, ["rational", "colength", "modular"])
    assert rep["primes"].startswith("skipped")
    assert rep["rational"]["center_dim"] == 3


def test_run_examples():
    rep = run(parse_scenario(shipped("exmod2")), ["modular"])
    assert {p: e["modular"]["z"] for p, e in rep["primes"].items()} == {"2": 1, "3": 4, "31": 5}
    rep = run(parse_scenario(shipped("exi26")), ["rational"])
    eps = rep["rational"]["epsilon1"]
    assert rep["rational"]["center_dim"] == 3
    third = [Fraction(1, 3), 0]
    assert {k: [Fraction(c) for c in v] for k, v in eps.items()} == {"()": third, "(1,2,3)": third, "(1,3,2)": third}
    rep = run(parse_scenario(shipped("exmod1")), ["modular"], primes=[3])
    blocks = rep["primes"]["3"]["modular"]["blocks"]
    assert len(blocks) == 1 and blocks[0]["simple_dim"] == 2
    assert rep["primes"]["3"]["modular"]["principal_residue_simple"] is True


def test_numbers_are_strings():
    rep = run(parse_scenario(shipped("gauss_c2")))

    def walk(x):
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)
        else:
            assert isinstance(x, (str, bool)) or x is None, x

    walk(json.loads(rep.to_json()))


def test_determinism_and_seed(monkeypatch):
    sc = parse_scenario(shipped("exmod1"))
    a = run(sc, seed=0).to_json()
    assert a == run(sc, seed=0).to_json()
    monkeypatch.setenv("WREATHE_SEED", "7")
    assert json.loads(run(sc).to_json())["seed"] == "7"


def test_cli_exit_codes(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["report", "--scenario", "gauss_c2", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["scenario"] == "gauss_c2"
    assert main(["verify", "--scenario", "c2_untwisted"]) == 0
    assert main(["verify", "--scenario", BAD]) == 2
    assert "not an automorphism" in capsys.readouterr().err
    assert main(["report", "--scenario", "no_such_thing"]) == 2
    assert main(["report", "--scenario", "gauss_c2", "--sections", "bogus"]) == 2


def test_cli_primes_override(capsys):
    assert main(["report", "--scenario", "gauss_c2", "--primes", "5", "--sections", "modular"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert list(data["primes"]) == ["5"]


def test_explain(capsys):
    assert main(["explain", "colength", "--scenario", "gauss_c2"]) == 0
    text = capsys.readouterr().out
    assert "formula = 2; oracle = 2" in text
    assert main(["explain", "modular", "--scenario", "exmod1"]) == 0
    assert "z = sum over p-regular classes" in capsys.readouterr().out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "wreathe", "list"], capture_output=True, text=True)
    assert res.returncode == 0 and "exmod2" in res.stdout.split()
