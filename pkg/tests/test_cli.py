import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

import subcubic_packing
from subcubic_packing.cli import EXIT_FINDING, EXIT_OK, EXIT_USAGE, main
from subcubic_packing.fixtures import fixture
from subcubic_packing.graph import emit_edge_list, emit_graph6
from subcubic_packing.solver import format_certificate

SCHEMA = json.loads((Path(subcubic_packing.__file__).parent / "schema" / "outputs.schema.json")
                    .read_text())


def _validate(obj, name):
    jsonschema.validate(obj, {**SCHEMA, "$ref": f"#/$defs/{name}"})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_fixture(capsys):
    code, out, _ = run(capsys, "classify", "prism_subdivided")
    facts = json.loads(out)
    _validate(facts, "classify")
    assert code == EXIT_OK and facts["average_degree"] == "11/4" and "hsat0" in facts["classes"]


def test_classify_edge_list_file(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(emit_edge_list(fixture("c8_two_chords").graph))
    code, out, _ = run(capsys, "classify", str(f))
    assert code == EXIT_OK and json.loads(out)["sat_level"] == 1


def test_solve_petersen_infeasible(capsys):
    code, out, _ = run(capsys, "solve", "--seq", "1,1,2,3", "petersen")
    res = json.loads(out)
    _validate(res, "solve")
    assert code == EXIT_OK and res["verdict"] == "infeasible"


def test_solve_budget(capsys):
    code, out, _ = run(capsys, "solve", "--seq", "1,1,2,3", "--budget", "2", "petersen")
    assert code == EXIT_OK and json.loads(out)["verdict"] == "budget"


def test_solve_then_verify_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "solve", "--seq", "1,2^4", "c12_three_chords")
    cert = json.loads(out)["certificate"]
    f = tmp_path / "col.txt"
    f.write_text(cert)
    code, out, _ = run(capsys, "verify", "--seq", "1,2^4", "--coloring", str(f), "c12_three_chords")
    res = json.loads(out)
    _validate(res, "verify")
    assert code == EXIT_OK and res["ok"] and res["violations"] == []


@pytest.mark.parametrize("method, name", [
    ("1133", "c12_three_chords"), ("1sat-12e4", "c8_two_chords"), ("30sat-12e5", "prism_subdivided"),
])
def test_construct_output_reverifies(capsys, tmp_path, method, name):
    code, out, _ = run(capsys, "construct", "--method", method, name)
    res = json.loads(out)
    _validate(res, "construct")
    assert code == EXIT_OK and res["verified"]
    f = tmp_path / "col.txt"
    f.write_text(res["certificate"])
    code, out, _ = run(capsys, "verify", "--seq", res["sequence"], "--coloring", str(f), name)
    assert json.loads(out)["ok"]


def test_corrupted_coloring_lists_violations(capsys, tmp_path):
    fx = fixture("hex_wheel_left")
    col = list(fx.coloring)
    col[fx.index("y1")] = col[fx.index("x1")]
    f = tmp_path / "col.txt"
    f.write_text(" ".join(map(str, col)))
    code, out, _ = run(capsys, "verify", "--seq", "1,2^4", "--coloring", str(f), "hex_wheel_left")
    res = json.loads(out)
    assert code == EXIT_OK and not res["ok"] and res["violations"]


def test_construct_out_of_class(capsys):
    code, _, err = run(capsys, "construct", "--method", "1133", "petersen")
    assert code == EXIT_USAGE and "NOT_IN_CLASS" in err


def test_usage_errors(capsys):
    assert run(capsys, "solve", "petersen")[0] == EXIT_USAGE
    assert run(capsys, "solve", "--seq", "2,1", "petersen")[0] == EXIT_USAGE
    assert run(capsys, "classify", "no-such-graph")[0] == EXIT_USAGE
    assert run(capsys, "bogus")[0] == EXIT_USAGE


def test_verify_partial_coloring_is_error(capsys, tmp_path):
    f = tmp_path / "col.txt"
    f.write_text(format_certificate([1, 2]))
    assert run(capsys, "verify", "--seq", "1,2", "--coloring", str(f), "petersen")[0] == EXIT_USAGE


def test_fixtures_check_and_export(capsys):
    code, out, _ = run(capsys, "fixtures", "check")
    assert code == EXIT_OK and json.loads(out)["ok"]
    code, out, _ = run(capsys, "fixtures", "export")
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 9 and lines[0]["graph6"] == emit_graph6(fixture("petersen").graph)


def test_sweep_and_ledger(capsys, tmp_path):
    ledger = tmp_path / "s.jsonl"
    code, out, _ = run(capsys, "sweep", "--class", "sat1", "--seq", "1,1,3,3", "--nmax", "6",
                       "--ledger", str(ledger), "--pipeline", "1133", "--workers", "1")
    res = json.loads(out)
    _validate(res, "sweep_summary")
    assert code == EXIT_OK and res["infeasible"] == 0
    rows = [json.loads(line) for line in ledger.read_text().splitlines()]
    _validate(rows[0], "ledger_header")
    for row in rows[1:]:
        _validate(row, "sweep_record")


def test_sweep_corpus(capsys, tmp_path):
    corpus = tmp_path / "c.g6"
    corpus.write_text(emit_graph6(fixture("c12_three_chords").graph) + "\n")
    code, out, _ = run(capsys, "sweep", "--class", "any", "--seq", "1,1,4,4", "--corpus",
                       str(corpus), "--ledger", str(tmp_path / "l.jsonl"))
    assert code == EXIT_OK and json.loads(out)["infeasible"] == 1


def test_hunt(capsys):
    code, out, _ = run(capsys, "hunt", "--class", "any", "--seq", "1,1,2,2", "--nmax", "6",
                       "--exclude", "petersen", "--workers", "1")
    res = json.loads(out)
    _validate(res, "hunt")
    assert code == EXIT_OK and res["status"] == "exhausted"


def test_claims(capsys, tmp_path):
    target = tmp_path / "claims.json"
    code, out, _ = run(capsys, "claims", "--nmax", "5", "--json", str(target), "--workers", "1")
    assert code == EXIT_OK and "overall" in out
    _validate(json.loads(target.read_text()), "claims")


def test_weights(capsys):
    code, out, _ = run(capsys, "weights", "--alpha", "7/10", "--beta", "0.35", "--seq", "1,1,3,3",
                       "--nmax", "5")
    res = json.loads(out)
    _validate(res, "weights")
    assert code == EXIT_OK and res["rows"][0]["weights"] == [20, 14, 7]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "subcubic_packing", "solve", "--seq", "1", "@"],
                          capture_output=True, text=True)
    assert proc.returncode == EXIT_OK and json.loads(proc.stdout)["verdict"] == "feasible"
    proc = subprocess.run([sys.executable, "-m", "subcubic_packing", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == EXIT_OK and subcubic_packing.__version__ in proc.stdout


def test_finding_exit_code_constant():
    assert EXIT_FINDING == 2
