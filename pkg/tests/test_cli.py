import json

from dyndeg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_cyclo(capsys):
    code, out = run(capsys, "cyclo", "--n", "12")
    assert code == 0 and out.out.strip() == "x^4 - x^2 + 1"
    _, out = run(capsys, "cyclo", "--n", "12", "--psi")
    assert out.out.strip() == "x^2 - 3"


def test_root(capsys):
    code, out = run(capsys, "root", "--poly", "x^3 - x^2 + 1", "--house", "--in-disc", "13/10",
                    "--totally-real")
    assert code == 0
    assert "1.1509" in out.out and "3 of 3" in out.out and "totally real: False" in out.out


def test_salem(capsys):
    code, out = run(capsys, "salem", "--family", "P", "--index", "13")
    assert code == 0 and "Phi_2 * Phi_8" in out.out and "Salem degree: 8" in out.out


def test_table(capsys):
    code, out = run(capsys, "table", "--id", "A.14", "--format", "json", "--compare")
    assert code == 0
    rows = json.loads(out.out)["rows"]
    assert rows == [["x^3 - x^2 + 1", "1.1509"], ["x^3 + x + 1", "1.2106"]]


def test_search(capsys):
    code, out = run(capsys, "search", "--kind", "totally-real", "--degree", "3", "--bound", "9/4",
                    "--above", "2", "--format", "json")
    assert code == 0
    hits = json.loads(out.out)["hits"]
    assert len(hits) == 5 and hits[0]["poly"] == "x^3 - 4*x - 1" and hits[0]["value"] == "2.1149"


def test_mindeg(capsys):
    code, out = run(capsys, "mindeg", "--g", "2", "--format", "json")
    d = json.loads(out.out)
    assert code == 0 and d["truncated"] == "2.6180" and d["closed_form"] == "4cos^2(pi/5)"
    code, out = run(capsys, "mindeg", "--prime", "13")
    assert code == 0 and "bounds_only: True" in out.out


def test_mindeg_errors(capsys):
    code, out = run(capsys, "mindeg", "--g", "11")
    assert code == 2 and "DimensionOutOfRange" in out.err
    code, out = run(capsys, "mindeg", "--prime", "9")
    assert code == 2 and "NotPrime" in out.err


def test_verify_json_schema(capsys):
    code, out = run(capsys, "verify", "--suite", "appendixB", "--format", "json")
    d = json.loads(out.out)
    assert code == 0
    assert {"suite", "cases", "passed", "failed", "discrepancies"} <= d.keys()
    assert d["suite"] == "appendixB" and d["cases"] == 19 and d["failed"] == 0


def test_verify_exit_code_on_discrepancy(capsys, monkeypatch):
    from dyndeg import salemfam

    monkeypatch.setattr(salemfam, "appendixB_check", lambda t, samples=100_000: 2)
    code, out = run(capsys, "verify", "--suite", "appendixB", "--format", "json")
    d = json.loads(out.out)
    assert code == 1 and d["failed"] == 19
    assert d["discrepancies"][0] == {"id": "sign changes at t=0.1", "expected_ref": "<= 1", "computed": "2"}
