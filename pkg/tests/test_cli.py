import json

import pytest

from ybme.cli import main, run


def test_count_example():
    status, out = run(["count", "--field", "7", "--matrix", "[[1,0],[0,2]]"])
    assert status == 0
    assert out.splitlines()[0] == "10"
    assert "Thm1_case2_deltaNonzero" in out


def test_verify_companion_isolated():
    status, out = run(["verify", "--theorem", "3", "--field", "5"])
    assert status == 0
    assert out.count("Thm3") == 4


def test_solve_json_and_check(tmp_path):
    status, out = run(["solve", "--field", "2", "--matrix", "[[1,0],[0,0]]", "--format", "json"])
    data = json.loads(out)
    assert status == 0 and data["cardinality"] == 8 and len(data["points"]) == 8
    path = tmp_path / "sol.json"
    path.write_text(out)
    assert run(["solve", "--check", str(path)])[0] == 0
    data["points"].append([[1, 1], [1, 1]])
    data["cardinality"] = 9
    path.write_text(json.dumps(data))
    status, msg = run(["solve", "--check", str(path)])
    assert status == 1 and "8/9" in msg


@pytest.mark.parametrize("field,matrix", [("3", "[[1,1],[1,2]]"), ("5", "[[0,0],[0,0]]"),
                                          ("4", "[[2,1],[0,3]]"), ("7", "[[3,1],[2,5]]")])
def test_count_equals_solve_length(field, matrix):
    n = int(run(["count", "--field", field, "--matrix", matrix])[1].splitlines()[0])
    data = json.loads(run(["solve", "--field", field, "--matrix", matrix, "--format", "json"])[1])
    assert n == data["cardinality"] == len(data["points"])


def test_parameter_flags():
    assert run(["count", "--field", "5", "--c", "2"])[1].startswith("7\n")
    assert run(["count", "--field", "5", "--c1", "1", "--c2", "2"])[1].startswith("8\n")
    assert run(["count", "--field", "11", "--a", "5", "--b", "1"])[1].startswith("2\n")


@pytest.mark.parametrize("argv,token", [
    (["solve", "--field", "6", "--matrix", "[[1,0],[0,1]]"], "'6'"),
    (["solve", "--field", "5", "--matrix", "[[1,z],[0,1]]"], "'z'"),
    (["solve", "--field", "5", "--matrix", "[[1,7],[0,1]]"], "'7'"),
    (["count", "--field", "5", "--c", "9"], "9"),
    (["verify", "--field", "5"], "--theorem"),
    (["frobnicate"], "frobnicate"),
])
def test_usage_errors(argv, token):
    status, msg = run(argv)
    assert status == 2 and token in msg


def test_formats():
    status, out = run(["verify", "--theorem", "2", "--field", "3", "--format", "csv"])
    assert status == 0 and out.splitlines()[0] == "q,class,params,predicted,observed,match"
    status, out = run(["nabla", "--field", "3", "--format", "json"])
    assert json.loads(out)["nabla0"] == [[0, 1]]
    status, out = run(["classify", "--field", "5", "--matrix", "[[2,1],[0,3]]", "--format", "json"])
    assert json.loads(out)["tag"] == "A1_DistinctDiag"
    status, out = run(["conjecture", "--field", "3"])
    assert status == 0 and "conjectural evidence" in out


def test_groebner_verbs():
    status, out = run(["groebner", "--field", "5", "--matrix", "[[1,0],[0,0]]"])
    assert status == 0 and out.splitlines() == ["x11^2 + 4*x11", "x11*x12", "x11*x21", "x12*x21"]
    status, out = run(["groebner", "--field", "5", "--poly", "x11*x12", "--poly", "x11 - 1"])
    assert out.splitlines() == ["x11 + 4", "x12"]
    assert run(["groebner", "--field", "3", "--c1", "2"])[0] == 0
    assert run(["groebner", "--field", "5", "--poly", "x11 + y"])[0] == 2


def test_out_file_and_main(tmp_path, capsys):
    path = tmp_path / "n.txt"
    assert main(["nabla", "--field", "5", "--out", str(path)]) == 0
    assert "(1,2)" in path.read_text()
    assert main(["count", "--field", "2", "--c1", "1", "--c2", "0"]) == 0
    assert capsys.readouterr().out.startswith("8")


def test_output_is_deterministic():
    argv = ["verify", "--theorem", "1", "--field", "4", "--format", "json"]
    assert run(argv) == run(argv)
