import csv
import io
import json
import subprocess
import sys

import pytest

from hhfrac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_eval_prints_report(capsys):
    code, out = run(capsys, "eval", "--eq", "thm24", "--f", "pow:2", "--a", "0", "--b", "1")
    doc = json.loads(out.out)
    assert code == 0 and doc["verdict"] == "pass" and doc["schema_version"] == 1
    assert {s["label"] for s in doc["sides"]} == {"lhs", "rhs_sharp", "rhs_final"}


def test_eval_negative_control_exit_code(capsys):
    code, out = run(capsys, "eval", "--eq", "hh", "--f", "quad:-1,0,0", "--a", "0", "--b", "1", "--allow-nonconvex")
    assert code == 1 and json.loads(out.out)["verdict"] == "fail"


def test_eval_bad_spec(capsys):
    code, out = run(capsys, "eval", "--eq", "hh", "--f", "sin", "--a", "0", "--b", "1")
    assert code == 2 and "unknown function family" in out.err


def test_eval_unmet_hypothesis(capsys):
    code, out = run(capsys, "eval", "--eq", "fejer", "--f", "exp", "--g", "asym:lin:1,1", "--a", "0", "--b", "1")
    assert code == 4 and "symmetric" in out.err


def test_eval_p_sets_q(capsys):
    code, out = run(capsys, "eval", "--eq", "thm26", "--f", "exp", "--a", "0", "--b", "1", "--p", "3")
    inst = json.loads(out.out)["instance"]
    assert inst["q"] == pytest.approx(1.5)


def test_sweep_csv(capsys, tmp_path):
    dest = tmp_path / "s.csv"
    code, _ = run(capsys, "sweep", "--bound", "thm24", "--f", "pow:2", "--g", "one",
                  "--a", "0", "--b", "1", "--alphas", "0.5:1.5:0.5", "--out", str(dest))
    rows = list(csv.DictReader(io.StringIO(dest.read_text())))
    assert code == 0 and [float(r["alpha"]) for r in rows] == [0.5, 1.0, 1.5]
    assert float(rows[1]["ratio"]) == pytest.approx(1 / 3) and rows[1]["rhs_stmt"] == ""


def test_verify_then_replay(capsys, tmp_path):
    dest = tmp_path / "r.json"
    code, out = run(capsys, "verify", "--suite", "negative-controls", "--n", "2", "--seed", "3", "--out", str(dest))
    assert code == 0 and "controls_detected=8/8" in out.out
    doc = json.loads(dest.read_text())
    assert doc["schema_version"] == 1 and doc["suite"] == "negative-controls" and len(doc["results"]) == 8
    code, out = run(capsys, "replay", "--record", str(dest))
    assert code == 0 and "replayed=8 mismatches=0" in out.out


def test_replay_single_report(capsys, tmp_path):
    code, out = run(capsys, "eval", "--eq", "lemma23", "--f", "abslin:2,0.3", "--g", "sym:bump:2",
                    "--a", "0", "--b", "1", "--alpha", "0.4")
    path = tmp_path / "one.json"
    path.write_text(out.out)
    code, out = run(capsys, "replay", "--record", str(path))
    assert code == 0 and out.out.startswith("MATCH lemma23 pass -> pass")


def test_verify_pool_overrides(capsys):
    code, out = run(capsys, "verify", "--suite", "identities", "--n", "1", "--alpha-range", "1",
                    "--f", "pow:2", "--g", "one", "--a-range", "0", "--length-range", "1")
    assert code == 0 and "pass=3" in out.out


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "hhfrac", "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "verify" in out.stdout
