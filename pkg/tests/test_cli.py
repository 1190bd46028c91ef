import json
import os
import subprocess
import sys

import pytest

from lanternkit.cli import main
from lanternkit.serialize import RELATION_SCHEMA, SECTION4_SCHEMA, validate


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate(capsys):
    code, out, err = run(capsys, "generate", "daisy", "3")
    assert code == 0
    doc = json.loads(out)
    validate(doc, RELATION_SCHEMA)
    assert doc["certificate"]["status"] == "verified"
    assert doc["metadata"]["properties"]["holds"]
    assert "verified" in err


@pytest.mark.parametrize("argv", [("generate", "daisy", "1"), ("generate", "wfam", "1", "2"),
                                  ("cf", "4", "2"), ("rho", "1"), ("rho", "9"),
                                  ("blowdown-report", "linear", "2", "1", "--chi", "56")])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cf", "x", "2"])
    assert exc.value.code == 2
    assert main([]) == 2


def test_verify_round_trip(capsys, tmp_path):
    _, out, _ = run(capsys, "generate", "lantern")
    good = tmp_path / "good.json"
    good.write_text(out)
    doc = json.loads(out)
    doc["rhs"] = doc["rhs"][::-1]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(good))
    assert code == 0 and json.loads(out)["certificate"]["status"] == "verified"
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1
    diag = json.loads(out)["certificate"]["diagnostic"]
    assert "first_differing_generator" in diag
    code, out, _ = run(capsys, "verify", "--jobs", "2", str(good), str(bad))
    assert code == 1 and len(json.loads(out)) == 2
    junk = tmp_path / "junk.json"
    junk.write_text("[]")
    code, _, _ = run(capsys, "verify", str(junk))
    assert code == 2


def test_cf(capsys):
    code, out, err = run(capsys, "cf", "17", "7")
    doc = json.loads(out)
    assert code == 0 and doc["coefficients"] == [3, 2, 6, 2, 4, 2]
    assert doc["c_sequence"] == [6, 4, 3] and doc["x_sequence"] == [2, 2, 1]
    assert "a2 b2 a1" in err


def test_blowdown_report(capsys):
    code, out, _ = run(capsys, "blowdown-report", "linear", "2", "1", "--chi", "56",
                       "--sigma", "-36")
    doc = json.loads(out)
    assert code == 0
    assert doc["blowdown"]["chi"] == 55 and doc["blowdown"]["sigma"] == -35
    assert (doc["blowdown"]["type"]["b2plus"], doc["blowdown"]["type"]["b2minus"]) == (9, 44)
    code, out, _ = run(capsys, "blowdown-report", "wfam", "1", "1", "1")
    doc = json.loads(out)
    assert code == 0 and doc["plumbing_match"]["verdict"] == "exact_basis"
    assert doc["vertex_count"] == doc["length_difference"] == 7
    code, out, _ = run(capsys, "blowdown-report", "nfam", "0", "1", "1")
    assert code == 0 and json.loads(out)["rhs_homology"]["rational_ball"]


def test_rho(capsys):
    code, out, err = run(capsys, "rho", "2")
    doc = json.loads(out)
    assert code == 0
    validate(doc, SECTION4_SCHEMA)
    assert (doc["chi_after"], doc["sigma_after"]) == (55, -35)
    assert "pass" in err
    assert run(capsys, "rho", "5", "--max-genus", "5")[0] == 0


def test_convention_ledger(capsys):
    code, out, _ = run(capsys, "--convention-ledger")
    doc = json.loads(out)
    assert code == 0 and doc["pinned"]["lantern"]["routing"] == "back"


def test_console_script_with_python_backend(tmp_path):
    env = dict(os.environ, LANTERNKIT_DISABLE_NUMBA="1")
    proc = subprocess.run([sys.executable, "-m", "lanternkit.cli", "generate", "wfam", "0", "1", "0"],
                          capture_output=True, text=True, env=env, timeout=300)
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["certificate"]["status"] == "verified"
    probe = subprocess.run([sys.executable, "-c", "import lanternkit; print(lanternkit.backend())"],
                           capture_output=True, text=True, env=env, timeout=120)
    assert probe.stdout.strip() == "python"
