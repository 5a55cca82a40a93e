import json
import subprocess
import sys

import pytest

from pathrep.cli import main

LOOP = "vertex x\narrow a: x -> x\n"
TWO_LOOPS = "vertex x\narrow a: x -> x\narrow b: x -> x\n"
KRONECKER = "vertex x\nvertex y\narrow a: x -> y\narrow b: x -> y\n"
A2 = "vertex x\nvertex y\narrow a: x -> y\n"
A3 = "vertex x\nvertex y\nvertex z\narrow a: x -> y\narrow b: y -> z\n"


@pytest.fixture
def qfile(tmp_path):
    def write(text, name="q.quiver"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_analyze_loop_truncated(qfile, capsys):
    assert main(["analyze", qfile(LOOP), "--truncate", "5"]) == 0
    out = capsys.readouterr().out
    assert "eff.dim(P) = 1" in out
    assert "eff.dim(P_5) = 5" in out


def test_analyze_a3(qfile, capsys):
    assert main(["analyze", qfile(A3), "--truncate", "2"]) == 0
    assert "eff.dim(P_2) = 4" in capsys.readouterr().out


def test_analyze_two_loops(qfile, capsys):
    assert main(["analyze", qfile(TWO_LOOPS)]) == 0
    assert "eff.dim(P) = 2" in capsys.readouterr().out


def test_analyze_json_deterministic(qfile, capsys):
    path = qfile(LOOP)
    assert main(["analyze", path, "--truncate", "3", "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["analyze", path, "--truncate", "3", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    data = json.loads(first)
    assert data["vertices"]["x"]["l_minus"] == "inf"
    assert data["vertices"]["x"]["K"] == [0, 2]
    assert data["totals"]["effdim_truncated"] == 3


def test_construct_a2_truncated(qfile, capsys):
    assert main(["construct", qfile(A2), "--truncate", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "truncated"
    assert data["arrows"][0]["matrix"] == [[2]]


def test_construct_two_loops_symbolic(qfile, capsys):
    assert main(["construct", qfile(TWO_LOOPS)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "path"
    assert data["vertex_dims"] == {"x": 2}
    assert [a["shape"] for a in data["arrows"]] == [[2, 2], [2, 2]]


def test_construct_truncation_level_one(qfile, capsys):
    assert main(["construct", qfile(A2), "--truncate", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["vertex_dims"] == {"x": 1, "y": 1}
    assert data["arrows"][0]["matrix"] == [[0]]


def test_construct_deterministic(qfile, capsys):
    path = qfile(KRONECKER)
    assert main(["construct", path, "--truncate", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["construct", path, "--truncate", "3"]) == 0
    assert first == capsys.readouterr().out


def test_verify_truncated_ok(qfile, capsys):
    assert main(["verify", qfile(LOOP), "--truncate", "3"]) == 0
    assert "status: effective" in capsys.readouterr().out


def test_verify_path_rep_ok(qfile, capsys):
    assert main(["verify", qfile(KRONECKER), "--max-len", "4"]) == 0
    out = capsys.readouterr().out
    assert "status: effective" in out


def test_verify_sabotaged_rep_file(qfile, tmp_path, capsys):
    quiver_path = qfile(KRONECKER)
    rep_path = tmp_path / "rep.json"
    assert main(["construct", quiver_path, "--truncate", "2", "--out", str(rep_path)]) == 0
    data = json.loads(rep_path.read_text())
    data["arrows"][1]["matrix"] = data["arrows"][0]["matrix"]
    rep_path.write_text(json.dumps(data))
    code = main(["verify", quiver_path, "--rep", str(rep_path)])
    out = capsys.readouterr().out
    assert code == 1
    assert "collision" in out
    assert "a" in out and "b" in out


def test_verify_rep_file_roundtrip_ok(qfile, tmp_path, capsys):
    quiver_path = qfile(A3)
    rep_path = tmp_path / "rep.json"
    assert main(["construct", quiver_path, "--truncate", "2", "--out", str(rep_path)]) == 0
    assert main(["verify", quiver_path, "--rep", str(rep_path), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "effective"
    assert data["witness"] is None


def test_construct_symbolic_labels_roundtrip(qfile, tmp_path, capsys):
    quiver_path = qfile(KRONECKER)
    rep_path = tmp_path / "rep.json"
    args = ["construct", quiver_path, "--truncate", "2", "--labels", "symbolic",
            "--out", str(rep_path)]
    assert main(args) == 0
    data = json.loads(rep_path.read_text())
    assert data["labels"] == "symbolic" and "label_table" in data
    assert main(["verify", quiver_path, "--rep", str(rep_path)]) == 0


def test_verify_rep_truncation_mismatch(qfile, tmp_path, capsys):
    quiver_path = qfile(LOOP)
    rep_path = tmp_path / "rep.json"
    assert main(["construct", quiver_path, "--truncate", "2", "--out", str(rep_path)]) == 0
    assert main(["verify", quiver_path, "--rep", str(rep_path), "--truncate", "3"]) == 2


def test_verify_threads_flag(qfile, capsys):
    assert main(["verify", qfile(TWO_LOOPS), "--max-len", "4", "--threads", "2"]) == 0
    assert "status: effective" in capsys.readouterr().out


def test_stabilize_a3(qfile, capsys):
    assert main(["stabilize", qfile(A3)]) == 0
    out = capsys.readouterr().out
    assert "a = 0" in out and "b = 3" in out and "threshold = 3" in out
    rows = [line.split() for line in out.splitlines() if line[:1].isdigit()]
    assert [(int(n), int(v)) for n, v in rows] == [(1, 3), (2, 4), (3, 3), (4, 3)]


def test_stabilize_loop_json(qfile, capsys):
    assert main(["stabilize", qfile(LOOP), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["a"], data["b"], data["threshold"]) == (1, 0, 1)
    assert data["table"] == [[1, 1], [2, 2]]


def test_formula_single_segment(capsys):
    assert main(["formula", "3", "--truncate", "2"]) == 0
    assert "eff.dim(P_2) = 4" in capsys.readouterr().out


def test_formula_multi_segment_json(capsys):
    assert main(["formula", "3,2", "--truncate", "2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"segments": [3, 2], "N": 2, "effdim": 5}


def test_formula_bad_segments(capsys):
    assert main(["formula", "3;2", "--truncate", "2"]) == 2
    assert "error:" in capsys.readouterr().err


def test_parse_error_exit_code(qfile, capsys):
    assert main(["analyze", qfile("vertex x\nbogus line\n")]) == 2
    err = capsys.readouterr().err
    assert "error:" in err and "line 2" in err


def test_missing_file_exit_code(capsys):
    assert main(["analyze", "/nonexistent/q.quiver"]) == 2
    assert "error:" in capsys.readouterr().err


def test_out_flag_writes_file(qfile, tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["analyze", qfile(LOOP), "--json", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["totals"]["effdim_path"] == 1


def test_shipped_sample_quivers(capsys):
    import pathlib

    samples = pathlib.Path(__file__).resolve().parent.parent / "quivers"
    paths = sorted(samples.glob("*.quiver"))
    assert len(paths) == 5
    for path in paths:
        assert main(["analyze", str(path), "--truncate", "3"]) == 0
        capsys.readouterr()


def test_module_invocation(qfile):
    proc = subprocess.run(
        [sys.executable, "-m", "pathrep.cli", "analyze", qfile(LOOP), "--truncate", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "eff.dim(P_2) = 2" in proc.stdout
