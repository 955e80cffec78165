import json
import subprocess
import sys

import pytest

from qbch.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_code(capsys):
    code, out, _ = run(capsys, "code", "15", "2", "1", "3")
    rec = json.loads(out)
    assert code == 0 and rec["k"] == 11 and rec["dual_containing"] is True and rec["schema"] == 1
    code, out, _ = run(capsys, "code", "15", "2", "1", "4")
    rec = json.loads(out)
    assert rec["k"] == 7 and rec["dual_containing"] is False
    code, _, err = run(capsys, "code", "15", "2", "1", "1")
    assert code == 1 and "at least 2" in err


def test_code_hermitian_and_generator(capsys):
    code, out, _ = run(capsys, "code", "15", "2", "1", "5", "--flavor", "hermitian", "--with-generator")
    rec = json.loads(out)
    assert rec["q"] == 4 and rec["hermitian_dual_containing"] is True
    assert len(rec["generator"]) == 15 - rec["k"] + 1


def test_usage_errors(capsys):
    assert run(capsys, "code", "15", "3", "1", "3")[0] == 1  # not coprime
    assert run(capsys, "code", "x")[0] == 1
    assert run(capsys)[0] == 1
    assert run(capsys, "quantum", "--family", "euclid", "31", "2")[0] == 1
    assert run(capsys, "scan", "--q", "2", "--n", "7", "--jobs", "0")[0] == 1


def test_quantum(capsys):
    code, out, _ = run(capsys, "quantum", "--family", "hermitian", "15", "2", "3")
    rec = json.loads(out)
    assert code == 0 and rec["label"] == "[[15,7,>=3]]_2"
    code, out, _ = run(capsys, "quantum", "--family", "euclid", "31", "2", "7")
    assert json.loads(out)["label"] == "[[31,1,>=7]]_2"
    code, out, _ = run(capsys, "quantum", "--family", "nested", "31", "2", "3", "5")
    rec = json.loads(out)
    assert rec["label"] == "[[31,5,>=3]]_2" and rec["pure_to"] == 5
    code, out, _ = run(capsys, "quantum", "--family", "expanded", "15", "2", "2", "3")
    rec = json.loads(out)
    assert (rec["n"], rec["k"], rec["k_as_printed"]) == (30, 14, 22)
    code, _, err = run(capsys, "quantum", "--family", "euclid", "15", "2", "4")
    assert code == 2 and "HypothesisViolated" in err


def test_thresholds(capsys):
    code, out, _ = run(capsys, "thresholds", "31", "2")
    rec = json.loads(out)
    assert rec["kappa"] == {"num": 7, "den": 1} and rec["exact_threshold"] == 7
    code, out, _ = run(capsys, "thresholds", "15", "2", "--flavor", "hermitian", "--format", "csv")
    lines = out.splitlines()
    assert lines[0].startswith("schema,") and len(lines) == 2


def test_scan_formats(capsys):
    code, out, _ = run(capsys, "scan", "--q", "2", "--n", "15", "--format", "csv")
    lines = out.splitlines()
    assert lines[0].split(",")[:5] == ["schema", "flavor", "q", "alphabet", "n"]
    assert len(lines) == 1 + 3  # auto: delta 2..4
    code, out, _ = run(capsys, "scan", "--q", "2", "--n", "15", "--format", "table")
    assert "[[15,7,>=3]]_2" in out
    code, out, _ = run(capsys, "scan", "--q", "2", "--n", "15", "--flavor", "hermitian")
    rows = [json.loads(x) for x in out.splitlines()]
    assert [r["delta"] for r in rows] == [2, 3, 4, 5, 6]
    assert [r["contains_dual"] for r in rows] == [True] * 4 + [False]


def test_scan_rows_only_quantum_when_containing(capsys):
    code, out, _ = run(capsys, "scan", "--q", "2:3", "--n", "5:30", "--delta", "all")
    for line in out.splitlines():
        r = json.loads(line)
        assert (r["quantum_k"] is not None) == r["contains_dual"]


def test_config_override(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"q": "3", "n": "8", "format": "csv"}))
    code, out, _ = run(capsys, "scan", "--config", str(cfg))
    assert out.splitlines()[1].split(",")[2] == "3"
    # explicit flags beat the file
    code, out, _ = run(capsys, "scan", "--config", str(cfg), "--q", "2", "--n", "7")
    assert out.splitlines()[1].split(",")[2] == "2"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"colour": "red"}))
    assert run(capsys, "scan", "--config", str(bad))[0] == 1


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, err = run(capsys, "verify", "--q", "2", "--n", "3:21", "--checks", "euclidean,dimension")
    assert code == 0 and out == "" and '"mismatches": 0' in err
    monkeypatch.setattr(
        "qbch.cli.verify_grid",
        lambda *a, **k: __import__("qbch.oracle", fromlist=["VerifyReport"]).VerifyReport(
            mismatches=[__import__("qbch.oracle", fromlist=["Mismatch"]).Mismatch(2, 7, 1, 3, "euclidean", "forced")]
        ),
    )
    code, out, _ = run(capsys, "verify", "--q", "2", "--n", "7")
    assert code == 3 and json.loads(out)["check"] == "euclidean"


def test_parse_range():
    assert parse_range("2,4,9:11") == [2, 4, 9, 10, 11]
    with pytest.raises(Exception):
        parse_range(",")


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "qbch", "code", "7", "2", "1", "3"],
                       capture_output=True, text=True, check=True)
    assert json.loads(p.stdout)["k"] == 4
