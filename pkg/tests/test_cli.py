import json
import subprocess
import sys

import pytest

from krcrystal.cli import EXIT_CAP, EXIT_DOMAIN, EXIT_OK, EXIT_PARSE, EXIT_VIOLATION, Config, DomainError, main
from krcrystal.tableaux import count_sst

EX1 = {"factors": [[[1, 1, 1, 1], [2, 2, 2, 2], [3, 4, 5, 6], [3, 5, 6, 7]], [[1, 1], [2, 3], [3, 4], [3, 4]]]}
EX3 = {"factors": [[[1, 1, 1, 1], [2, 2, 2, 2], [3, 3, 3, 3], [4, 5, 6, 7]], [[1, 1, 4], [4, 5, 6]]]}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_letter_crystal_dot(capsys):
    code, out, _ = run(capsys, "crystal", "--M", "2", "--N", "2", "--r", "1", "--s", "1", "--format", "dot")
    assert code == EXIT_OK
    assert out.count("[label=\"") == 4 + 4
    assert out.count('label="0"') == 1
    assert "n3 -> n0" in out


def test_non_hook_rectangle_exit(capsys):
    code, _, err = run(capsys, "crystal", "--M", "1", "--N", "3", "--r", "2", "--s", "5")
    assert code == EXIT_DOMAIN
    assert "lambda_2 = 5 > N = 3" in err


def test_json_node_count(capsys, tmp_path):
    code, out, _ = run(capsys, "crystal", "--M", "3", "--N", "4", "--r", "3", "--s", "5", "--format", "json",
                       "--cache-dir", str(tmp_path))
    assert code == EXIT_OK
    from krcrystal.alphabet import GroundData

    assert len(json.loads(out)["nodes"]) == count_sst(GroundData(3, 4), (5, 5, 5)) == 4096


def test_crystal_to_file_and_csv(capsys, tmp_path):
    target = tmp_path / "g.csv"
    code, out, _ = run(capsys, "crystal", "--M", "2", "--N", "2", "--r", "1", "--s", "1", "--format", "csv",
                       "--out", str(target), "--no-cache")
    assert code == EXIT_OK and out == ""
    assert target.read_text().splitlines() == ["source,i,target", "0,1,1", "1,2,2", "2,3,3", "3,0,0"]


def test_rmatrix_first_pair(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps(EX1))
    code, out, _ = run(capsys, "rmatrix", "--M", "2", "--N", "5", "4", "4", "4", "2", "--pair", str(f))
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "H: 4"
    code, out, _ = run(capsys, "rmatrix", "--M", "2", "--N", "5", "4", "4", "4", "2", "--pair", str(f),
                       "--format", "json")
    body = json.loads(out)
    assert [f["rows"] for f in body["image"]["factors"]] == [
        [[1, 1], [2, 2], [3, 4], [3, 7]], [[1, 1, 1, 1], [2, 2, 2, 3], [3, 4, 5, 6], [3, 4, 5, 6]]]
    assert body["energy"] == 4


def test_rmatrix_third_pair(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps(EX3))
    code, out, _ = run(capsys, "rmatrix", "--M", "3", "--N", "4", "4", "4", "2", "3", "--pair", str(f),
                       "--format", "json")
    assert code == EXIT_OK
    body = json.loads(out)
    assert [f["rows"] for f in body["image"]["factors"]] == [
        [[1, 1, 1], [2, 2, 2]], [[1, 1, 1, 3], [2, 3, 3, 4], [3, 4, 5, 6], [4, 5, 6, 7]]]


@pytest.mark.parametrize("payload", [
    "not json",
    json.dumps({"factors": [[[1, 1]]]}),
    json.dumps({"factors": [[[1, "a"], [2, 2]], [[1]]]}),
    json.dumps({"factors": [[[1, 1], [2]], [[1]]]}),
    json.dumps({"factors": [[[2, 1], [3, 3]], [[1]]]}),
])
def test_rmatrix_bad_pair(capsys, tmp_path, payload):
    f = tmp_path / "p.json"
    f.write_text(payload)
    code, _, err = run(capsys, "rmatrix", "--M", "2", "--N", "2", "2", "2", "1", "1", "--pair", str(f))
    assert code == EXIT_PARSE
    assert err.startswith("error:")


def test_rmatrix_table_csv(capsys):
    code, out, _ = run(capsys, "rmatrix", "--M", "2", "--N", "2", "1", "1", "1", "1", "--format", "csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "element_id,image_id,H" and len(lines) == 17
    # on equal factors R is the identity
    assert all(l.split(",")[0] == l.split(",")[1] for l in lines[1:])


@pytest.mark.parametrize("argv", [
    ["verify", "yang-baxter", "--M", "2", "--N", "2", "--triple", "1,1", "1,1", "1,1"],
    ["verify", "sigma", "--M", "3", "--N", "4", "--r", "3", "--s", "5"],
    ["verify", "qseries", "--poles", "--s", "3"],
    ["verify", "axioms", "--M", "2", "--N", "2", "--r", "2", "--s", "2"],
    ["verify", "axioms", "--M", "2", "--N", "2", "--pair", "1,2", "2,1"],
    ["verify", "connected", "--M", "1", "--N", "3", "--pair", "2,1", "1,2"],
    ["verify", "connected", "--M", "1", "--N", "3", "--r", "2", "--s", "2"],
    ["verify", "hwv", "--M", "2", "--N", "2", "--pair", "2,2", "1,2"],
    ["verify", "energy", "--M", "2", "--N", "2", "--pair", "1,2", "2,1"],
])
def test_verify_suites_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["violations"] == [] and report["check"]


def test_cap_exit(capsys):
    code, _, err = run(capsys, "crystal", "--M", "3", "--N", "4", "--r", "3", "--s", "5", "--node-cap", "10",
                       "--no-cache")
    assert code == EXIT_CAP
    assert "more than 10 elements" in err


def test_usage_errors(capsys):
    assert run(capsys, "crystal", "--M", "2")[0] == EXIT_PARSE
    assert run(capsys, "verify", "axioms", "--r", "1", "--s", "1")[0] == EXIT_DOMAIN
    assert run(capsys, "verify", "energy", "--M", "2", "--N", "2")[0] == EXIT_DOMAIN
    assert run(capsys, "crystal", "--M", "0", "--N", "4", "--r", "1", "--s", "1")[0] == EXIT_DOMAIN


def test_config_validation(tmp_path):
    with pytest.raises(DomainError):
        Config(2, 2, tmp_path, 0, "json")
    with pytest.raises(DomainError):
        Config(2, 2, tmp_path, 10, "xml")


def test_violation_exit_code_is_distinct():
    assert len({EXIT_OK, EXIT_VIOLATION, EXIT_DOMAIN, EXIT_PARSE, EXIT_CAP}) == 5


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-c", "from krcrystal.cli import main; raise SystemExit(main())",
                           "crystal", "--M", "2", "--N", "2", "--r", "1", "--s", "1", "--format", "text",
                           "--cache-dir", str(tmp_path)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("B^{1,1} for (M,N)=(2,2): 4 nodes, 4 edges")
