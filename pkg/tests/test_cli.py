import json

import pytest

from modlie import cli


def test_construct_type(capsys):
    assert cli.main(["construct", "--type", "G2", "--p", "7"]) == 0
    out = capsys.readouterr().out
    assert "dim 14" in out and "centre 0" in out


def test_construct_family(capsys):
    assert cli.main(["construct", "--family", "Er", "--n", "1,1", "--p", "3"]) == 0
    assert "dim 26" in capsys.readouterr().out
    assert cli.main(["construct", "--family", "H", "--m", "6", "--n", "1",
                     "--p", "2", "--derived", "1"]) == 0
    assert "dim 62" in capsys.readouterr().out


def test_construct_dump(tmp_path, capsys):
    path = tmp_path / "g2.json"
    assert cli.main(["construct", "--type", "G2", "--p", "5",
                     "--dump", str(path)]) == 0
    data = json.loads(path.read_text())
    assert data["dim"] == 14 and data["p"] == 5


def test_construct_bad_input():
    assert cli.main(["construct", "--type", "X9", "--p", "5"]) == 2
    assert cli.main(["construct", "--p", "5"]) == 2


def test_orbit_check(capsys):
    assert cli.main(["orbit", "--group", "F4", "--p", "3",
                     "--orbit", "~A2+A1"]) == 0
    assert "dim g_e = 18" in capsys.readouterr().out
    assert cli.main(["orbit", "--group", "F4", "--p", "3", "--orbit", "Z"]) == 2


def test_orbit_analyze(capsys):
    assert cli.main(["orbit", "--group", "F4", "--p", "3", "--orbit", "~A2+A1",
                     "--analyze"]) == 0
    out = capsys.readouterr().out
    assert "radical 8" in out and "N_g(A) 26" in out


def test_verify_task_and_json(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = cli.main(["verify", "--task", "thm-ermax", "--json", str(path)])
    assert code == 0
    data = json.loads(path.read_text())
    assert data["schema"] == 1 and data["task"] == "thm-ermax"
    assert all(c["pass"] for c in data["checks"])
    assert all("anchor" in c for c in data["checks"])


def test_verify_unknown_task(capsys):
    assert cli.main(["verify", "--task", "thm-nothing"]) == 2


def test_filtration_command(capsys):
    assert cli.main(["filtration", "--group", "F4", "--p", "3",
                     "--orbit", "~A2+A1"]) == 0
    out = capsys.readouterr().out
    assert '"radical_dim": 0' in out
    assert '"simple": true' in out
