import io
import json
import subprocess
import sys

import pytest

from minqube.cli import main, rule_from_dict, rule_to_dict
from minqube.cubature import minimal_rule_g
from minqube.verify import verify_rule


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_rule_csv_g_n1():
    code, text = run(["rule", "g", "--alpha", "0", "--gamma", "-0.5", "--n", "1"])
    rows = text.strip().splitlines()
    assert code == 0 and rows[0] == "x,y,weight" and len(rows) == 5
    assert all(float(r.split(",")[2]) == 0.125 for r in rows[1:])


def test_rule_json_omega():
    code, text = run(["rule", "omega", "--alpha", "0", "--gamma", "0.5", "--n", "2", "--format", "json"])
    d = json.loads(text)
    assert code == 0 and d["schema"] == "minimal-cubature/1"
    assert d["nodes"] == [pytest.approx([6, 7])] and d["weights"] == [pytest.approx(1.0)]


def test_rule_csv_uses_17_digits():
    _, text = run(["rule", "omega", "--alpha", "0", "--gamma", "-0.5", "--n", "2"])
    u = text.splitlines()[1].split(",")[0]
    assert len(u.replace(".", "").lstrip("0")) == 17


def test_bad_alpha_exit_2(capsys):
    code, _ = run(["rule", "g", "--alpha", "-2", "--gamma", "-0.5", "--n", "1"])
    assert code == 2
    assert "alpha must exceed -1" in capsys.readouterr().err


def test_bad_gamma_exit_2(capsys):
    code, _ = run(["rule", "g", "--alpha", "0", "--gamma", "0.25", "--n", "1"])
    assert code == 2


def test_bad_rule_file_exit_2(tmp_path):
    p = tmp_path / "r.json"
    p.write_text('{"schema": "other"}')
    assert run(["verify", "--rule", str(p)])[0] == 2
    assert run(["verify", "--rule", str(tmp_path / "missing.json")])[0] == 2


def test_numerical_failure_exit_3(monkeypatch):
    import minqube.cli as cli
    from minqube.errors import NumericalFailure

    def boom(*a, **k):
        raise NumericalFailure("eigen solver did not converge")

    monkeypatch.setattr(cli, "minimal_rule_g", boom)
    assert run(["rule", "g", "--alpha", "0", "--gamma", "-0.5", "--n", "1"])[0] == 3


@pytest.mark.parametrize("argv,degree,code", [
    (["verify", "g", "--alpha", "0", "--gamma", "-0.5", "--n", "2"], 7, 0),
    (["verify", "omega", "--alpha", "0", "--gamma", "-0.5", "--n", "1"], 1, 0),
    (["verify", "g", "--alpha", "0", "--gamma", "0.5", "--n", "2"], 3, 0),
    (["verify", "g", "--alpha", "0", "--gamma", "0.5", "--n", "2", "--strict-claim"], 3, 1),
])
def test_verify(argv, degree, code):
    got, text = run(argv)
    rec = json.loads(text)
    assert got == code and rec["achieved_degree"] == degree
    if "-0.5" in argv and "g" in argv:
        assert rec["attains_lower_bound"] is True


def test_verify_tolerance_env(monkeypatch):
    monkeypatch.setenv("MINQUBE_TOL", "1e-30")
    code, text = run(["verify", "g", "--alpha", "0", "--gamma", "-0.5", "--n", "2"])
    assert json.loads(text)["rel_tol"] == 1e-30 and code == 1
    monkeypatch.setenv("MINQUBE_TOL", "tight")
    assert run(["verify", "g", "--alpha", "0", "--gamma", "-0.5", "--n", "2"])[0] == 2


def test_round_trip_reproduces_verdict(tmp_path, w0):
    path = tmp_path / "rule.json"
    assert run(["rule", "g", "--alpha", "0.5", "--gamma", "-0.5", "--n", "3",
                "--format", "json", "--out", str(path)])[0] == 0
    code_file, from_file = run(["verify", "--rule", str(path)])
    code_direct, direct = run(["verify", "g", "--alpha", "0.5", "--gamma", "-0.5", "--n", "3"])
    assert code_file == code_direct == 0
    assert from_file == direct


def test_rule_dict_round_trip_is_lossless():
    from minqube.orthopoly1d import WeightSpec1D

    r = minimal_rule_g(WeightSpec1D.shifted_laguerre(2.0), -0.5, 4)
    back = rule_from_dict(json.loads(json.dumps(rule_to_dict(r))))
    assert (back.nodes == r.nodes).all() and (back.weights == r.weights).all()
    assert verify_rule(back) == verify_rule(r)


def test_moments():
    code, text = run(["moments", "g", "--alpha", "0", "--gamma", "-0.5", "--max-degree", "2"])
    rows = {tuple(r.split(",")[:2]): r.split(",") for r in text.splitlines()[1:]}
    assert code == 0 and float(rows[("2", "0")][2]) == pytest.approx(1.25)
    assert rows[("2", "0")][3] == "product"
    code, _ = run(["moments", "omega", "--alpha", "0", "--gamma", "-0.5",
                   "--max-degree", "2", "--oracle", "bruteforce"])
    assert code == 2


def test_basis():
    code, text = run(["basis", "g", "--alpha", "0", "--gamma", "-0.5", "--degree", "2", "--at", "1,2"])
    rows = [r.split(",") for r in text.splitlines()[1:]]
    fam1 = [float(r[2]) for r in rows if r[0] == "1"]
    assert code == 0 and fam1 == pytest.approx([0, 0], abs=1e-12)
    assert run(["basis", "g", "--alpha", "0", "--gamma", "-0.5", "--degree", "2", "--at", "1,-2"])[0] == 2


def test_domain():
    code, text = run(["domain", "--umax", "6", "--samples", "100"])
    rows = text.splitlines()
    assert code == 0 and rows[0] == "curve,u,v" and len(rows) == 201
    assert rows[1] == "line,2,1" and rows[101] == "parabola,2,1"


def test_deterministic_subprocess(tmp_path):
    cmd = [sys.executable, "-m", "minqube", "rule", "g", "--alpha", "0.5", "--gamma", "-0.5",
           "--n", "4", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
