import json
import subprocess
import sys

import pytest

from coquasi import serialize as ser
from coquasi import zoo as cz
from coquasi.cli import main
from coquasi.comodcat import regular_comodule
from coquasi.recon import entry_grading_diagram


def run(*args):
    return main([str(a) for a in args])


@pytest.fixture
def z2_file(tmp_path):
    path = tmp_path / "h.json"
    assert run("example", "group-coquasi", "--group", "Z2", "--cocycle", "sign", "-o", path) == 0
    return path


def test_validate_running_example(z2_file):
    assert run("validate", z2_file, "--kind", "coquasi") == 0


def test_solve_then_check(z2_file, tmp_path):
    s = tmp_path / "s.json"
    assert run("preantipode", "solve", z2_file, "-o", s) == 0
    assert json.loads(s.read_text())["S"] == [["1", "0"], ["0", "-1"]]
    assert run("preantipode", "check", z2_file, s) == 0


def test_finite_dual_then_validate(tmp_path):
    a = tmp_path / "a.json"
    h = tmp_path / "h.json"
    assert run("example", "group-quasi", "--group", "Z2", "--cocycle", "sign", "-o", a) == 0
    assert run("finite-dual", a, "-o", h) == 0
    assert run("validate", h, "--kind", "coquasi") == 0
    assert run("appendix-check", a) == 0


def test_axiom_failure_exit_one(z2_file, tmp_path, capsys):
    doc = json.loads(z2_file.read_text())
    doc["omega"][7] = "1/7"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    capsys.readouterr()
    assert run("validate", bad, "--report", "json") == 1
    rep = json.loads(capsys.readouterr().out)
    assert rep["pass"] is False and rep["failures"]
    assert all(set(f) == {"axiom", "index"} for f in rep["failures"])


def test_wrong_preantipode_exit_one(z2_file, tmp_path):
    s = tmp_path / "s.json"
    s.write_text(json.dumps({"dim": 2, "S": [["1", "0"], ["0", "1"]]}))
    assert run("preantipode", "check", z2_file, s) == 1


def test_schema_and_io_errors(tmp_path):
    assert run("validate", tmp_path / "missing.json") == 2
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run("validate", junk) == 2
    partial = tmp_path / "partial.json"
    partial.write_text('{"coalgebra": {"dim": 1}}')
    assert run("validate", partial) == 2


def test_field_flag_before_and_after(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert run("--field", "fp:5", "example", "group-coquasi", "--group", "Z4", "--cocycle", "cyclic:1:2", "-o", a) == 0
    assert run("example", "group-coquasi", "--group", "Z4", "--cocycle", "cyclic:1:2", "--field", "fp:5", "-o", b) == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["omega"][0] == {"p": 5, "v": 1}
    assert run("validate", a) == 0


def test_outputs_are_deterministic(tmp_path):
    outs = []
    for i in range(2):
        p = tmp_path / f"o{i}.json"
        run("example", "group-quasi", "--group", "Z2xZ2", "--cocycle", "sign", "-o", p)
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]


def test_reconstruct_and_reingest(tmp_path):
    d = tmp_path / "d.json"
    ser.write(ser.diagram_to_json(entry_grading_diagram(cz.z4_omega())[0]), d)
    assert run("validate", d, "--kind", "diagram") == 0
    out = tmp_path / "coend.json"
    assert run("reconstruct", d, "-o", out) == 0
    doc = json.loads(out.read_text())
    assert set(doc) == {"coalgebra", "mult", "unit", "omega", "proj", "S"}
    assert run("validate", out) == 0
    s = tmp_path / "s.json"
    s.write_text(json.dumps({"S": doc["S"]}))
    assert run("preantipode", "check", out, s) == 0


def test_dualize_comodule(tmp_path):
    v = tmp_path / "v.json"
    ser.write(ser.comodule_to_json(regular_comodule(cz.z2_omega().h)), v)
    assert run("validate", v, "--kind", "comodule") == 0
    out = tmp_path / "vd.json"
    assert run("dualize-comodule", v, "-o", out) == 0
    doc = json.loads(out.read_text())
    assert doc["dual"]["dim"] == 2


def test_bad_cocycle_is_input_error():
    assert run("example", "group-coquasi", "--group", "Z3", "--cocycle", "sign") == 2


def test_cocycle_violation_exit_one(tmp_path):
    c = tmp_path / "c.json"
    vals = ["1"] * 27
    vals[13] = "2"
    c.write_text(json.dumps({"cocycle": vals}))
    assert run("example", "group-coquasi", "--group", "Z3", "--cocycle", c) == 1


def test_group_table_file(tmp_path):
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"table": [list(r) for r in cz.symmetric3().table]}))
    assert run("example", "group-coquasi", "--group", g, "--cocycle", "trivial") == 0


def test_module_entry_point(z2_file):
    res = subprocess.run([sys.executable, "-m", "coquasi", "validate", str(z2_file)], capture_output=True, text=True)
    assert res.returncode == 0
    assert "PASS" in res.stdout
