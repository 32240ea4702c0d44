import json
import subprocess
import sys

import pytest

from ramanujan_jets.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_relations(capsys):
    assert run(capsys, "relations", "--family", "5F4:1/2,1/2", "--z", "-1/4")[0] == 0
    assert run(capsys, "relations", "--family", "5F4:1/5,2/5", "--z", "1/100")[0] == 0
    assert run(capsys, "relations", "--family", "3F2:1/2", "--z", "2")[0] == 2
    code, out, _ = run(capsys, "relations", "--family", "3F2:1/3", "--samples", "2", "--seed", "4", "--json")
    assert code == 0 and len(json.loads(out)["points"]) == 2


def test_mirror(capsys):
    code, out, _ = run(capsys, "mirror", "--family", "5F4:1/2,1/2", "--order", "5", "--json")
    data = json.loads(out)
    assert code == 0 and data["scale"] == "1024"
    assert data["z_of_q"][1:] == [str(1024 * c) for c in (1, -320, 34400, -1894400, 62019120)]
    assert data["U_equals_q_dT_dq"] is True
    assert run(capsys, "mirror", "--order", "0")[0] == 2
    code, out, _ = run(capsys, "mirror", "--family", "3F2:1/2", "--order", "5")
    assert code == 0 and "64, -1536, 19200" in out


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "--family", "5F4:1/2,1/2", "--k", "1", "--u", "-1", "--json")
    data = json.loads(out)
    assert code == 0
    assert {k: data[k] for k in ("tau2", "j", "z", "a", "b", "c")} == \
        {"tau2": "5", "j": "25", "z": "-1/4", "a": "1/8", "b": "1", "c": "5/2"}
    code, out, _ = run(capsys, "solve", "--family", "3F2:1/2", "--k", "2", "--json")
    data = json.loads(out)
    assert code == 0 and (data["z"], data["a"], data["b"]) == ("1/4", "1/4", "3/2")
    assert run(capsys, "solve", "--family", "5F4:1/2,1/2", "--k", "0", "--bits", "128")[0] == 3
    assert run(capsys, "solve", "--family", "3F2:1/2", "--k", "0")[0] == 3
    assert run(capsys, "solve", "--family", "7F6", "--k", "1")[0] == 2
    assert run(capsys, "solve", "--family", "5F4:1/2,1/2", "--k", "1", "--u", "2")[0] == 2


def test_signature_theta_probe(capsys):
    code, out, _ = run(capsys, "signature", "--family", "7F6", "--z", "1/64",
                       "--poly", "1/32,14/32,76/32,168/32", "--json")
    data = json.loads(out)
    assert code == 0 and data["k"]["exact"] == "2" and data["j"]["exact"] == "32" and data["l"]["exact"] == "4112"
    code, out, _ = run(capsys, "theta", "--q", "0.1", "--json")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "probe", "--family", "5F4:1/2,1/2", "--k", "1,2", "--bits", "128")
    assert code == 0 and "k=1: tau=sqrt(5)" in out


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "theta", "--q", "0.1", "--bits", "16")[0] == 2
    assert run(capsys, "relations", "--family", "4F3:1/2")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ramanujan_jets", "theta", "--q", "1/20"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "theta3" in proc.stdout
