import csv
import io
import json

import pytest

from airy_monodromy import documents
from airy_monodromy.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, code",
    [
        (["classify", "--p", "2", "--d", "7"], 0),
        (["classify", "--p", "2", "--d", "5"], 0),
        (["classify", "--p", "2", "--d", "6"], 1),
        (["classify", "--p", "4", "--d", "7"], 1),
        (["classify", "--p", "2", "--d", "2"], 1),
        (["classify", "--p", "3", "--d", "5", "--r-max", "3", "--r0-max", "2"], 2),
        (["oracle", "--p", "2", "--r", "3", "--d", "7"], 2),
        (["oracle", "--p", "2", "--r", "4", "--d", "5"], 0),
        (["oracle", "--p", "3", "--r", "2", "--d", "4", "--gauss-checks"], 0),
        (["oracle", "--p", "3", "--r", "2", "--d", "4", "--fourth-moment"], 1),
        (["scan", "--p", "2", "--d-min", "9", "--d-max", "3"], 1),
        (["bogus"], 1),
        ([], 1),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_gcd_message(capsys):
    _, _, err = run(capsys, "classify", "--p", "2", "--d", "6")
    assert "gcd(d, p) = gcd(6, 2) != 1" in err


def test_oracle_output(capsys):
    code, out, _ = run(capsys, "oracle", "--p", "2", "--r", "3", "--d", "7")
    assert code == 2 and "FAIL at t=0 (v=1 < 1.5)" in out
    code, out, _ = run(capsys, "oracle", "--p", "2", "--r", "2", "--d", "3", "--fourth-moment")
    assert code == 0 and "lhs=256 rhs=256" in out


def test_classify_json_document(capsys):
    code, out, _ = run(capsys, "classify", "--p", "2", "--d", "7")
    data = json.loads(out)
    assert data["schema_version"] == "1"
    assert data["command"] == "classify --p 2 --d 7 --r-max 24 --r0-max 12"
    (entry,) = data["results"]
    assert entry["verdict"] == "infinite" and entry["group"] == "Sp(6)"
    assert entry["certificate"] == {"kind": "witness", "r": 3, "x": 1, "lhs": 3, "rhs_digit": 1}


def test_csv_and_json_agree(capsys, tmp_path):
    base = ["scan", "--p", "2", "--d-min", "3", "--d-max", "41"]
    _, out_json, _ = run(capsys, *base)
    _, out_csv, _ = run(capsys, *base, "--format", "csv")
    rows = list(csv.reader(io.StringIO(out_csv)))
    assert rows[0] == ["p", "d", "verdict", "cert_kind", "r", "x", "r0", "group"]
    doc = documents.loads(out_json)
    assert len(rows) - 1 == len(doc.results)
    for row, c in zip(rows[1:], doc.results):
        assert [int(row[0]), int(row[1]), row[2], row[3]] == [c.p, c.d, c.verdict, c.certificate.kind]
        if c.certificate.kind == "witness":
            assert (int(row[4]), int(row[5])) == (c.certificate.witness.r, c.certificate.witness.x)
        assert row[7] == (c.group or "")


def test_text_format(capsys):
    code, out, _ = run(capsys, "scan", "--p", "2", "--d-min", "3", "--d-max", "15", "--format", "text")
    assert code == 0 and "d=7" in out and "DISAGREEMENT" not in out


def test_json_round_trip(capsys):
    _, out, _ = run(capsys, "scan", "--p", "3", "--d-min", "4", "--d-max", "14", "--r-max", "6", "--r0-max", "3")
    doc = documents.loads(out)
    assert documents.dumps(documents.loads(documents.dumps(doc))) == documents.dumps(doc)
    again = documents.loads(documents.dumps(doc))
    assert again.results == doc.results and again.skipped == doc.skipped == [6, 9, 12]


def _scan_to(capsys, path, *extra):
    code, _, _ = run(capsys, "scan", "--p", "2", "--d-min", "3", "--d-max", "61", "--out", str(path), *extra)
    return code


def test_verify_accepts_scan(capsys, tmp_path):
    path = tmp_path / "scan.json"
    assert _scan_to(capsys, path) == 0
    code, out, _ = run(capsys, "verify", "--in", str(path))
    assert code == 0 and "verified 30/30" in out


def test_verify_detects_tampered_witness(capsys, tmp_path):
    path = tmp_path / "scan.json"
    _scan_to(capsys, path)
    data = json.loads(path.read_text())
    entry = next(e for e in data["results"] if e["d"] == 7)
    entry["certificate"]["x"] = 3  # 2 is in the orbit of 1 and still violates
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--in", str(path))
    assert code == 2 and "p=2 d=7" in out


def test_verify_detects_tampered_certificate(capsys, tmp_path):
    path = tmp_path / "one.json"
    run(capsys, "classify", "--p", "2", "--d", "15", "--out", str(path))
    data = json.loads(path.read_text())
    data["results"][0]["verdict"] = "finite"
    data["results"][0]["group"] = None
    data["results"][0]["certificate"] = {"kind": "certified", "r0": 4, "value_points": 14, "limit_points": 120}
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--in", str(path))
    assert code == 2 and "p=2 d=15" in out


def test_verify_empty_and_schema_mismatch(capsys, tmp_path):
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"schema_version": "1", "command": "scan", "results": [], "skipped": []}))
    assert run(capsys, "verify", "--in", str(path))[0] == 0
    path.write_text(json.dumps({"schema_version": "99", "command": "scan", "results": []}))
    assert run(capsys, "verify", "--in", str(path))[0] == 1
    path.write_text("not json")
    assert run(capsys, "verify", "--in", str(path))[0] == 1
    assert run(capsys, "verify", "--in", str(tmp_path / "missing.json"))[0] == 1


def test_resume_reuses_and_extends(capsys, tmp_path):
    path = tmp_path / "resume.json"
    assert run(capsys, "scan", "--p", "2", "--d-min", "3", "--d-max", "21", "--resume", str(path))[0] == 0
    first = documents.loads(path.read_text())
    assert run(capsys, "scan", "--p", "2", "--d-min", "3", "--d-max", "41", "--resume", str(path))[0] == 0
    second = documents.loads(path.read_text())
    old = {c.d: c.elapsed for c in first.results}
    assert all(c.elapsed == old[c.d] for c in second.results if c.d in old)
    assert max(c.d for c in second.results) == 41


def test_threads_flag_and_env_are_deterministic(capsys, monkeypatch):
    base = ["scan", "--p", "2", "--d-min", "3", "--d-max", "45"]
    outs = []
    for extra in ([], ["--threads", "2"]):
        _, out, _ = run(capsys, *base, *extra)
        outs.append(documents.dumps(documents.loads(out), drop_elapsed=True))
    monkeypatch.setenv("AIRY_THREADS", "3")
    _, out, _ = run(capsys, *base)
    outs.append(documents.dumps(documents.loads(out), drop_elapsed=True))
    assert outs[0] == outs[1] == outs[2]
    monkeypatch.setenv("AIRY_THREADS", "many")
    assert run(capsys, *base)[0] == 1
