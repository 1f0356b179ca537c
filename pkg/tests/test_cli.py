import json
import subprocess
import sys

import pytest

from squarebases.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_uset(capsys):
    code, out, _ = run(capsys, "uset", "3")
    assert code == 0 and json.loads(out) == [[1, -2, 1], [1, 0, -1]]


def test_uset_csv(capsys):
    code, out, _ = run(capsys, "uset", "3", "--format", "csv")
    assert out.splitlines() == ["x0,x1,x2", "1,-2,1", "1,0,-1"]


def test_tree_text_and_json(capsys):
    code, out, _ = run(capsys, "tree", "3")
    assert out.splitlines() == ["1 -2 1", "  L: 1 _ -1"]
    code, out, _ = run(capsys, "tree", "3", "--format", "json")
    assert json.loads(out)["root"]["left"]["label"] == [1, 0, -1]


def test_expand_cyclic_matches_reference_row(capsys, tmp_path):
    f = tmp_path / "z.json"
    f.write_text("[[1, -1, 0], [-1, 0, 1], [0, 1, -1]]")
    code, out, _ = run(capsys, "expand", "--basis", "vmn", "--input", str(f))
    doc = json.loads(out)
    assert code == 0
    assert doc["coefficients"] == ["0", "1/2", "1/2", "0"] and doc["residual_is_zero"]


def test_check_non_square_exits_1(capsys, tmp_path):
    f = tmp_path / "bad.csv"
    f.write_text("1,2,3\n2,3,1\n")
    code, _, err = run(capsys, "check", "--kind", "latin", "--input", str(f))
    assert code == 1 and "square" in err


def test_check_kinds(capsys, tmp_path):
    f = tmp_path / "lo.json"
    f.write_text("[[2,7,6],[9,5,1],[4,3,8]]")
    for kind, want in (("normal_magic", True), ("magic", True), ("latin", False)):
        code, out, _ = run(capsys, "check", "--kind", kind, "--input", str(f))
        assert code == 0 and json.loads(out)["result"] is want
    code, out, _ = run(capsys, "check", "--kind", "magic", "--input", str(f), "--magic-sum", "14")
    assert json.loads(out)["result"] is False


def test_bad_input_file_exits_1(capsys, tmp_path):
    f = tmp_path / "x.json"
    f.write_text("[[0.5, 1]]")
    assert run(capsys, "expand", "--input", str(f))[0] == 1
    assert run(capsys, "expand", "--input", str(tmp_path / "missing"))[0] == 1


def test_argument_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["uset"])
    assert exc.value.code == 1
    assert run(capsys, "uset", "1")[0] == 1
    assert run(capsys, "magic-basis", "2")[0] == 1
    assert run(capsys, "enumerate", "6")[0] == 1


def test_resource_guard_exits_2(capsys, monkeypatch):
    monkeypatch.setenv("SQUAREBASES_MAX_TABLES", "10")
    code, _, err = run(capsys, "connectivity", "--rows", "2", "2", "2", "--cols", "2", "2", "2")
    assert code == 2 and "SQUAREBASES_MAX_TABLES" in err


def test_connectivity(capsys):
    code, out, _ = run(capsys, "connectivity", "--rows", "1", "1", "1", "--cols", "1", "1", "1")
    assert json.loads(out) == {"tables": 6, "edges": 4, "components": 2,
                               "connected": False, "moves": "adjacent"}
    code, out, _ = run(capsys, "connectivity", "--rows", "1", "1", "1", "--cols", "1", "1", "1",
                       "--moves", "basic")
    assert json.loads(out)["connected"] is True


def test_sample_reproducible_and_valid(capsys, tmp_path):
    args = ["sample", "--rows", "3", "1", "4", "2", "--cols", "2", "5", "1", "2",
            "--steps", "10000", "--seed", "42"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b
    table = json.loads(a)["table"]
    assert [sum(r) for r in table] == [3, 1, 4, 2]
    assert [sum(c) for c in zip(*table)] == [2, 5, 1, 2]
    start = tmp_path / "s.json"
    start.write_text("[[1, 0], [0, 1]]")
    assert run(capsys, "sample", "--rows", "2", "2", "--cols", "2", "2", "--steps", "3",
               "--seed", "1", "--start", str(start))[0] == 1


def test_bases_and_output_file(capsys, tmp_path):
    target = tmp_path / "b.json"
    assert run(capsys, "magic-basis", "4", "--output", str(target))[0] == 0
    doc = json.loads(target.read_text())
    assert doc["size"] == 7 and doc["ell"] >= 1
    for argv, size in ((["basis", "3", "3"], 4), (["basis", "--dway", "3", "3", "3"], 8),
                       (["sudoku-basis", "2"], 8), (["symm-basis", "3"], 4)):
        code, out, _ = run(capsys, *argv)
        assert code == 0 and json.loads(out)["size"] == size


def test_basis_csv(capsys):
    code, out, _ = run(capsys, "basis", "2", "2", "--format", "csv")
    assert out.splitlines()[1:] == ["1,-1", "-1,1"]


def test_enumerate_and_census(capsys):
    code, out, _ = run(capsys, "enumerate", "3")
    assert json.loads(out)["count"] == 12
    code, out, _ = run(capsys, "census", "3", "--members")
    doc = json.loads(out)
    assert doc["classes"] == 2 and [s["size"] for s in doc["signatures"]] == [4, 8]
    assert len(doc["signatures"][0]["members"]) == 4


def test_classify_and_scaling(capsys):
    code, out, _ = run(capsys, "classify", "3")
    assert json.loads(out)["counts"] == {"centrosymmetric": 2, "skew_centrosymmetric": 2}
    code, out, _ = run(capsys, "scaling-bound", "3", "3")
    assert json.loads(out)["bound"] == 4


def test_verify_via_console_script():
    proc = subprocess.run([sys.executable, "-m", "squarebases.cli", "verify"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "all checks passed" in proc.stdout
    assert "FAIL" not in proc.stdout
