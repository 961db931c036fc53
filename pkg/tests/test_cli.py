import json
import os
import subprocess
import sys

import pytest

from gft import zoo
from gft.cli import main
from gft.series import write_coefficients


def run(*args):
    return subprocess.run([sys.executable, "-m", "gft", *args], capture_output=True, text=True,
                          env={**os.environ, "GFT_ORACLE_SCALE": "quick"})


def test_table1_csv():
    out = run("table1")
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert lines[0] == "a2_abs,r6"
    assert lines[1:] == ["0.25,0.361166", "0.5,0.362294", "0.75,0.364226", "1,0.367042",
                         "1.25,0.370874", "1.5,0.375923", "1.75,0.382504", "2,0.391124"]


def test_radii_json(capsys):
    assert main(["radii", "--beta", "0", "--alpha", "1", "--a2", "0"]) == 0
    doc = json.loads(capsys.readouterr().out)
    vals = {r["formula_id"]: r["value"] for r in doc["radii"]}
    assert vals["r1"] == pytest.approx(0.414214, abs=1e-6)
    assert vals["r4"] == pytest.approx(0.64731, abs=5e-5)
    assert vals["r6"] == pytest.approx(0.360794, abs=1e-6)
    assert set(vals) == {"r1", "r2", "r3", "r4", "r5", "r6", "r_inv_sqrt3"}


def test_radii_text_and_csv(capsys):
    assert main(["radii", "--format", "csv"]) == 0
    assert capsys.readouterr().out.startswith("formula_id,value,residual")
    assert main(["radii", "--format", "text"]) == 0
    assert "r2" in capsys.readouterr().out


def test_param_error_exit_code():
    out = run("radii", "--beta", "2")
    assert out.returncode == 2
    assert "beta out of [0,1): 2.0" in out.stderr


def test_bad_grid_exit_code(capsys):
    assert main(["estimate", "--zoo", "koebe", "--n-angular", "10"]) == 2


def test_unknown_zoo_exit_code():
    out = run("estimate", "--zoo", "nonexistent")
    assert out.returncode == 3
    assert "nonexistent" in out.stderr


def test_estimate_json_deterministic():
    a = run("estimate", "--zoo", "f1", "--property", "univalence")
    b = run("estimate", "--zoo", "f1", "--property", "univalence")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert doc["zoo"] == "f1" and doc["property_id"] == "univalence"
    assert abs(doc["radius"] - 0.4226) < 3e-3


def test_estimate_u_koebe_beta(capsys, monkeypatch):
    monkeypatch.setenv("GFT_ORACLE_SCALE", "quick")
    assert main(["estimate", "--zoo", "koebe-beta", "--beta", "0.5", "--property", "u"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert abs(doc["radius"] - 0.5) < 2e-3


def test_estimate_custom_file(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("GFT_ORACLE_SCALE", "quick")
    path = tmp_path / "f2.txt"
    write_coefficients(zoo.example_f2().f.series.truncate(2), path)
    out = tmp_path / "o.json"
    assert main(["estimate", "--zoo", f"custom:{path}", "--property", "u", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    # the series-only path is capped by the trust radius
    assert 0.75 <= doc["radius"] <= 0.8


def test_estimate_target_f_g_alpha(capsys, monkeypatch):
    monkeypatch.setenv("GFT_ORACLE_SCALE", "quick")
    assert main(["estimate", "--zoo", "f2", "--target", "f", "--property", "g-alpha",
                 "--alpha", "1", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "zoo,target,property_id,radius,lower_bound"
    assert lines[1].startswith("f2,f,g-alpha,0.99")


def test_conjecture_quick(capsys, monkeypatch):
    monkeypatch.setenv("GFT_ORACLE_SCALE", "quick")
    assert main(["conjecture"]) == 0
    doc = json.loads(capsys.readouterr().out)
    ids = {row["id"] for row in doc["rows"]}
    assert {"koebe", "f1", "f2"} <= ids
    assert doc["min_univalence"] == pytest.approx(0.4141, abs=3e-3)


def test_unknown_subcommand():
    assert run("frobnicate").returncode == 2
