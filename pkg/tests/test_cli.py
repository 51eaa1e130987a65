import csv
import io
import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from terrace.cli import main

SCHEMA = json.loads(resources.files("terrace").joinpath("data/report_schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("family,code", [("ln1p@k=1", 0), ("tan@k=1", 1), ("sin@k=1", 2)])
def test_certify_exit_codes(capsys, family, code):
    got, out, _ = run(capsys, "certify", "--family", family)
    assert got == code
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["certificate"]["verdict"] == {0: "certified_hyponormal", 1: "refuted", 2: "undecided"}[code]


@pytest.mark.parametrize("argv", [["certify", "--family", "bogus@k=1"], ["certify"], ["frobnicate", "--family", "tan@k=1"],
                                  ["explore", "--family", "ln1p@k=1", "--dims", "5000"],
                                  ["explore", "--family", "ln1p@k=1"], ["certify", "--family", "tan@k=2", "--prefix", "-1"],
                                  ["explore", "--family", "ln1p@k=1", "--dims", "a,b"],
                                  ["explore", "--family", "ln1p@k=1", "--dims", "5", "--eig-tol", "0"]])
def test_usage_errors_exit_3(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 3 and out == "" and "error" in err


def test_deterministic_without_timestamp(capsys):
    args = ["certify", "--family", "tan@k=2", "--no-timestamp"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b
    assert "generated_at" not in json.loads(a) and "elapsed_seconds" not in a


def test_timestamp_present_by_default(capsys):
    _, out, _ = run(capsys, "certify", "--family", "ln1p@k=1")
    doc = json.loads(out)
    assert "generated_at" in doc and "elapsed_seconds" in doc["certificate"]["statistics"]


def test_certificate_rationals_are_exact(capsys):
    _, out, _ = run(capsys, "certify", "--family", "ln1p@k=1", "--no-timestamp")
    tail = json.loads(out)["certificate"]["tails"][0]
    assert tail["valid"] and tail["sturm"]["kind"] == "nonneg"
    for c in tail["reduced_numerator"]:
        int(c["num"]), int(c["den"])


def test_table_json_and_warning(capsys):
    code, out, _ = run(capsys, "table", "--family", "sinh@k=1", "--prefix", "3", "--no-timestamp")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert code == 0 and len(doc["table"]) == 4
    assert any("a_0 > 1" in w for w in doc["warnings"])


def test_table_csv(capsys):
    _, out, _ = run(capsys, "table", "--family", "cesaro@k=1", "--prefix", "5", "--format", "csv", "--no-timestamp")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["n"]) for r in rows] == list(range(6))
    assert all(r["upper_check"] == "holds" for r in rows)


def test_table_markdown(capsys):
    _, out, _ = run(capsys, "table", "--family", "atan@k=1", "--prefix", "2", "--format", "markdown")
    assert out.startswith("# terrace table: `atan@k=1`")
    assert "| 0 |" in out and "fails" in out


def test_certify_markdown(capsys):
    _, out, _ = run(capsys, "certify", "--family", "tan@k=1", "--format", "markdown")
    assert "**Verdict:** refuted" in out and "Normaloid refutation" in out


def test_explore_json_and_out_file(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "explore", "--family", "tan@k=2", "--dims", "10,40", "--weighted-check",
                       "--prefix", "30", "--out", str(target), "--no-timestamp")
    assert code == 0 and out == ""
    doc = json.loads(target.read_text())
    jsonschema.validate(doc, SCHEMA)
    assert [r["N"] for r in doc["spectra"]] == [10, 40]
    assert doc["weighted_monotonicity"]["first_decrease_violation"] == 0


def test_explore_csv(capsys):
    _, out, _ = run(capsys, "explore", "--family", "cesaro@k=1", "--dims", "8", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["N"] == "8" and float(rows[0]["min_eig"]) > -1e-8


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "terrace", "certify", "--family", "tan@k=1", "--no-timestamp"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["family"] == "tan@k=1"


def test_docs_schema_matches_packaged_copy():
    docs = Path(__file__).resolve().parents[1] / "docs" / "report_schema.json"
    assert json.loads(docs.read_text()) == SCHEMA
