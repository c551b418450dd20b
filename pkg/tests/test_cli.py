from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from alcove_twist import cli, report
from alcove_twist.rootsys import build_root_system


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_poly(tmp_path, n, coeffs):
    path = tmp_path / "poly.json"
    path.write_text(json.dumps({"n": n, "coeffs": coeffs}))
    return str(path)


def test_psi_a2(capsys):
    code, out, _ = run_cli(capsys, "psi", "--type", "A2")
    assert code == 0
    rep = json.loads(out)
    assert [r["order"] for r in rep["rows"]] == [1, 3, 3]
    assert rep["center_order"] == 3
    assert rep["rows"][1]["char_poly"] == "t^2 + t + 1"


def test_springer_g2(capsys):
    code, out, _ = run_cli(capsys, "springer", "--type", "G2")
    rep = json.loads(out)
    assert code == 0 and rep["ok"]
    assert len(rep["rows"]) == 1
    assert rep["rows"][0]["twist_set_size"] == 1


def test_springer_single_x(capsys):
    code, out, _ = run_cli(capsys, "springer", "--type", "A3", "--x", "2")
    rep = json.loads(out)
    assert code == 0
    assert [r["x"] for r in rep["rows"]] == [2]
    assert rep["rows"][0]["a"] == 1


def test_alcove_report(capsys):
    code, out, _ = run_cli(capsys, "alcove", "--type", "A1")
    rep = json.loads(out)
    assert code == 0
    assert rep["barycenter"] == ["1/4"]


def test_newton_nu(capsys):
    code, out, _ = run_cli(capsys, "newton", "--type", "GL6", "--nu", ",".join(["1/3"] * 6))
    rep = json.loads(out)
    assert code == 0
    assert rep["twist"]["cycle_type"] == [3, 3]
    assert rep["twist"]["label"] == "A^{w(nu)}"


def test_newton_and_witness_poly(tmp_path, capsys):
    # t^2 - (1 + eps) t + eps
    path = write_poly(tmp_path, 2, [[[1, "1", "0"]], [[0, "-1", "0"], [1, "-1", "0"]]])
    code, out, _ = run_cli(capsys, "newton", "--type", "GL2", "--poly", path)
    rep = json.loads(out)
    assert code == 0
    assert rep["polygon"]["blocks"] == [["0", 1], ["1", 1]]
    assert rep["checks"]["cycle_type_matches_polygon"]
    code, out, _ = run_cli(capsys, "witness", "--type", "GL2", "--poly", path)
    rep = json.loads(out)
    assert code == 0 and rep["witness"]["cycle_type"] == [1, 1]


def test_witness_central_val_sign(capsys):
    code, out, _ = run_cli(capsys, "witness", "--type", "GL3", "--nu", "1/3,1/3,1/3")
    rep = json.loads(out)
    assert code == 0
    assert rep["witness"]["cycle_type"] == [3]
    assert rep["witness"]["val"] == ["-1/3"] * 3


@pytest.mark.parametrize("argv", [
    ("psi", "--type", "H3"),
    ("newton", "--type", "GL3", "--nu", "0,1,0"),
    ("newton", "--type", "GL2", "--nu", "1/3,0"),
    ("newton", "--type", "GL2", "--nu", "1,2,3"),
    ("newton", "--type", "GL2", "--nu", "1/0,1"),
    ("witness", "--type", "B3", "--nu", "1,0,0"),
    ("springer", "--type", "A2", "--x", "5"),
    ("psi", "--type", "E7"),
])
def test_invalid_input_exits_2(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_missing_poly_file(capsys, tmp_path):
    code, _, err = run_cli(capsys, "newton", "--type", "GL2", "--poly", str(tmp_path / "nope.json"))
    assert code == 2


def test_bad_poly_file(capsys, tmp_path):
    path = write_poly(tmp_path, 3, [[[0, "1", "0"]]])
    code, _, _ = run_cli(capsys, "newton", "--type", "GL3", "--poly", path)
    assert code == 2
    path = write_poly(tmp_path, 2, [[], [[0, "1", "0"]]])
    code, _, _ = run_cli(capsys, "newton", "--type", "GL2", "--poly", path)
    assert code == 2


def test_failure_exits_1(monkeypatch, capsys):
    real = report.springer_report

    def broken(*args, **kwargs):
        rep = real(*args, **kwargs)
        rep["rows"][0]["ok"] = False
        rep["ok"] = False
        return rep

    monkeypatch.setattr(report, "springer_report", broken)
    code, out, _ = run_cli(capsys, "springer", "--type", "A1")
    assert code == 1


def test_failure_rows_carry_offending_element(monkeypatch):
    monkeypatch.setattr(report, "psi_class", lambda rs, x: set())
    code, rep = cli.run(cli.RunConfig(command="springer", type="A2"))
    assert code == 1
    bad = [r for r in rep["rows"] if not r["ok"]]
    assert bad and all("offending_w" in r for r in bad)


def test_determinism(capsys):
    outs = []
    for _ in range(2):
        for argv in (("springer", "--type", "B3"), ("witness", "--type", "GL4", "--nu", "1/2,1/2,0,0"),
                     ("table", "--max-rank", "2")):
            outs.append(run_cli(capsys, *argv)[1])
    assert outs[:3] == outs[3:]


def test_text_format_is_derived_from_json(capsys):
    code, out, _ = run_cli(capsys, "psi", "--type", "A1", "--format", "text")
    assert code == 0
    assert "command: psi" in out and "ok: True" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "psi.json"
    code, out, _ = run_cli(capsys, "psi", "--type", "B2", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["ok"]


def test_table_rows(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "table", "--max-rank", "4", "--out", str(tmp_path))
    assert code == 0
    rep = json.loads((tmp_path / "table.json").read_text())
    rows = {r["type"]: r for r in rep["rows"]}
    expect = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"]
    assert sorted(rows) == expect
    for k, r in rows.items():
        if k[0] == "A":
            assert r["center_order"] == int(k[1:]) + 1
        assert r["center_order"] == r["det_cartan"] == build_root_system(k).determinant
    assert rows["F4"]["center_order"] == 1
    table = list(csv.DictReader(io.StringIO((tmp_path / "table.csv").read_text())))
    assert [r["type"] for r in table] == [r["type"] for r in rep["rows"]]
    assert tuple(table[0]) == report.TABLE_COLUMNS


def test_table_nulls_beyond_cap():
    rows = report.table_rows(2, cap=5)
    big = [r for r in rows if r["type"] != "A1"]
    assert big and all(r["psi_char_polys"] is None and r["twist_class_sizes"] is None for r in big)
    assert all(r["ok"] for r in rows)
    assert [r["weyl_order"] for r in rows] == [2, 6, 8, 8, 12]


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "alcove_twist.cli", "psi", "--type", "A1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["rows"][1]["order"] == 2
