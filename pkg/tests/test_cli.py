import json

import pytest

from kfgc.cli import main

TRIANGLE = "p fgc 3 3 1\ne 1 2 1 U\ne 2 3 1 U\ne 1 3 1 U\n"
PATH = "p fgc 3 2 1\ne 1 2 1 U\ne 2 3 1 U\n"


@pytest.fixture
def write(tmp_path):
    def _write(text, name="inst.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def test_solve_ok(write, capsys):
    assert main(["solve", write(TRIANGLE)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "ok" and doc["edges"] == [0, 1, 2] and doc["cost"] == 3


def test_solve_root_and_prune(write, capsys):
    assert main(["solve", write(TRIANGLE), "--root", "3", "--prune", "--check-invariants"]) == 0
    assert json.loads(capsys.readouterr().out)["root"] == 3


def test_solve_infeasible(write, capsys):
    assert main(["solve", write(PATH)]) == 2
    assert json.loads(capsys.readouterr().out)["status"] == "infeasible"


def test_parse_error(write, capsys):
    assert main(["solve", write("p fgc 2 1 1\ne 1 1 4 U\n")]) == 3
    assert "line 2" in capsys.readouterr().err


def test_usage_and_io_errors(write):
    with pytest.raises(SystemExit) as info:
        main(["solve"])
    assert info.value.code == 1
    assert main(["solve", "/nonexistent/file"]) == 1
    assert main(["solve", write(TRIANGLE), "--root", "9"]) == 1


def test_exact(write, capsys):
    assert main(["exact", write(TRIANGLE)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["opt"] == 3 and doc["status"] == "optimal"


def test_exact_refuses_large(write):
    big = "p fgc 2 25 1\n" + "e 1 2 1 U\n" * 25
    assert main(["exact", write(big)]) == 4


def test_check(write, capsys):
    path = write(TRIANGLE)
    assert main(["check", path]) == 0
    assert main(["check", path, "--solution", "0,1,2"]) == 0
    assert main(["check", path, "--solution", "0,1"]) == 2
    out = capsys.readouterr().out.splitlines()
    assert out[:3] == ["feasible", "feasible", "infeasible"]
    # dropping edge {1,3} leaves {1,2} and {2,3}; some cut crosses only one of them
    assert out[3] in ("violated cut S = 1", "violated cut S = 3", "violated cut S = 1 2", "violated cut S = 2 3")
    assert main(["check", write(PATH)]) == 2
    assert main(["check", path, "--solution", "0,7"]) == 1


def test_gen_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    args = ["gen", "--n", "9", "--m", "20", "--k", "2", "--seed", "5", "--feasible"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_bench(tmp_path):
    out = tmp_path / "bench.csv"
    args = ["bench", "--trials", "100", "--n", "6", "--m", "10", "--seed", "3"]
    assert main(args + ["--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "trial,seed,cost,arb_cost,opt,ratio,ok"
    assert len(lines) == 102
    summary = json.loads(lines[-1][2:])
    assert summary["violations"] == 0 and summary["max_ratio"] <= 2
    assert main(["bench", "--n", "4", "--m", "30"]) == 4


def test_bench_jobs_match_serial(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["bench", "--trials", "12", "--n", "5", "--m", "8", "--k", "2", "--seed", "1"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--jobs", "2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
