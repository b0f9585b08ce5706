import json
import re
import subprocess
import sys

import pytest

from quandle_posets.cli import main, parse_builtin
from quandle_posets.errors import QuandlePosetError
from quandle_posets.quandle import dihedral


def run(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_dihedral6(capsys):
    code, out, _ = run(["validate", "--builtin", "dihedral:6"], capsys)
    assert code == 0
    assert out == "valid, orbits {0,2,4},{1,3,5}, connected=false, latin=false\n"


def test_validate_trivial1(capsys):
    code, out, _ = run(["validate", "--builtin", "trivial:1", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["valid"] and data["orbits"] == [[0]]


def test_validate_corrupted_file(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("3\n0 2 1\n1 1 0\n2 0 2\n")
    code, out, _ = run(["validate", "--input", str(f)], capsys)
    assert code == 1
    assert "NotDistributive(" in out


def test_validate_json_input(tmp_path, capsys):
    f = tmp_path / "q.json"
    f.write_text(json.dumps({"n": 3, "table": [[0, 0, 1], [1, 1, 0], [2, 2, 2]]}))
    code, out, _ = run(["validate", "--input", str(f)], capsys)
    assert code == 0 and "orbits {0,1},{2}" in out


def test_parse_error_exit(tmp_path, capsys):
    f = tmp_path / "q.txt"
    f.write_text("2\n0 x\n1 1\n")
    code, _, err = run(["validate", "--input", str(f)], capsys)
    assert code == 1 and "line 2, column 3" in err


def test_missing_file(capsys):
    code, _, err = run(["enumerate", "--input", "/nonexistent/q.txt"], capsys)
    assert code == 1 and "cannot read" in err


def test_no_quandle_given(capsys):
    code, _, err = run(["enumerate"], capsys)
    assert code == 1 and "--builtin" in err


@pytest.mark.parametrize("spec", ["bogus:1", "dihedral", "dihedral:x", "dihedral:0", "alexander:6:2",
                                  "table:9:9", "enum:3:9"])
def test_bad_builtins(spec, capsys):
    with pytest.raises(QuandlePosetError):
        parse_builtin(spec)
    assert main(["validate", "--builtin", spec]) == 1


def test_builtins():
    assert parse_builtin("dihedral:8") == dihedral(8)
    assert parse_builtin("alexander:5:4") == dihedral(5)
    assert parse_builtin("table:2:1").table == ((0, 0, 1), (1, 1, 0), (2, 2, 2))
    assert parse_builtin("enum:3:1").n == 3


def test_enumerate_table2(capsys):
    code, out, _ = run(["enumerate", "--builtin", "table:2:1"], capsys)
    assert code == 0 and "((0,2),(1,2))" in out


def test_enumerate_dihedral5_empty(capsys):
    code, out, _ = run(["enumerate", "--builtin", "dihedral:5", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["orders"] == []


def test_enumerate_dihedral10_iso(capsys):
    code, out, _ = run(["enumerate", "--builtin", "dihedral:10", "--dedup", "iso", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["dedup"] == "iso"
    chi1 = [[0, 1], [0, 9], [2, 1], [2, 3], [4, 3], [4, 5], [6, 5], [6, 7], [8, 7], [8, 9]]
    chi5 = [[0, 5], [2, 7], [4, 9], [6, 1], [8, 3]]
    assert chi1 in data["orders"] and chi5 in data["orders"]


def test_enumerate_both_sides(capsys):
    code, out, _ = run(["enumerate", "--builtin", "table:2:1", "--side", "both", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and set(data) == {"right", "left"}
    assert [[0, 1]] in data["left"]["orders"]


def test_enumerate_dot(capsys):
    code, out, _ = run(["enumerate", "--builtin", "dihedral:6", "--format", "dot"], capsys)
    graphs = re.findall(r'digraph "[^"]+" \{.*?\n\}\n', out, re.S)
    assert code == 0 and len(graphs) == 6 and "".join(graphs) == out


def test_enumerate_cap(capsys):
    code, _, err = run(["enumerate", "--builtin", "dihedral:12", "--max-order", "10"], capsys)
    assert code == 1 and "cap" in err


def test_enumerate_left_cap(capsys):
    code, _, _ = run(["enumerate", "--builtin", "trivial:7", "--side", "left"], capsys)
    assert code == 1


def test_out_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, stdout, _ = run(["enumerate", "--builtin", "dihedral:4", "--format", "json", "--out", str(out)], capsys)
    assert code == 0 and stdout == ""
    assert json.loads(out.read_text())["side"] == "right"


def test_deterministic_output(capsys):
    args = ["enumerate", "--builtin", "trivial:4", "--dedup", "iso-dual", "--format", "json"]
    _, a, _ = run(args, capsys)
    _, b, _ = run(args, capsys)
    assert a == b


def test_reproduce_tables_exit_zero(tmp_path, capsys):
    out = tmp_path / "diff.txt"
    code, _, _ = run(["reproduce-tables", "--out", str(out)], capsys)
    assert code == 0 and "RESULT: OK" in out.read_text()


def test_verify_small_cap(capsys):
    code, out, _ = run(["verify", "--max-order", "3"], capsys)
    assert code == 0 and "RESULT: PASS" in out
    assert "known discrepancy" in out


def test_verify_rejects_faulty_input(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("2\n1 1\n0 0\n")
    code, out, _ = run(["verify", "--input", str(f)], capsys)
    assert code == 1 and out == ""


def test_dihedral_command(capsys):
    code, out, _ = run(["dihedral", "--max-order", "5", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and [d["chi_class_count"] for d in data] == [1, 2, 1, 2]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quandle_posets.cli", "validate", "--builtin", "dihedral:3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "valid, orbits {0,1,2}, connected=true, latin=true\n"
