import json

import pytest

from macweyl import cli, verify


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_epoly_text(capsys):
    code, out = run_cli(capsys, "epoly", "--family", "A2", "--n", "-1", "--spec", "t0")
    assert code == 0
    assert out.strip() == "x^-1 + q + x"


def test_epoly_n0(capsys):
    code, out = run_cli(capsys, "epoly", "--family", "A2", "--n", "0", "--spec", "t0")
    assert code == 0
    assert out.strip() == "1"


def test_epoly_json_schema(capsys):
    code, out = run_cli(
        capsys, "epoly", "--family", "A2dagger", "--n", "2", "--spec", "t0",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["family"] == "A2dagger" and doc["n"] == 2 and doc["spec"] == "t0"
    terms = {(t["x"], t["q"]): t["coeff"] for t in doc["terms"]}
    assert terms == {(2, 0): "1", (1, 2): "1", (0, 2): "1"}


def test_epoly_full_json(capsys):
    code, out = run_cli(
        capsys, "epoly", "--family", "A2", "--n", "1", "--spec", "full",
        "--format", "json",
    )
    doc = json.loads(out)
    assert doc["normalized"] is True
    assert {t["x"] for t in doc["terms"]} == {0, 1}
    for t in doc["terms"]:
        assert "num" in t and "den" in t


def test_walks_json(capsys):
    code, out = run_cli(capsys, "walks", "--n", "-1", "--format", "json")
    doc = json.loads(out)
    assert len(doc["walks"]) == 4
    rec = {w["mask"]: w for w in doc["walks"]}
    assert rec["11"]["wt"] == -1 and rec["11"]["h"] == "222"
    assert rec["00"]["leg"] == 1
    assert rec["10"]["J0+"] == [2]


def test_walks_filtered(capsys):
    code, out = run_cli(
        capsys, "walks", "--n", "-1", "--filter", "A2-t0", "--format", "json"
    )
    doc = json.loads(out)
    assert len(doc["walks"]) == 3


def test_weylchar_and_basis(capsys):
    code, out = run_cli(capsys, "weylchar", "--module", "Wsigma", "--n", "-1")
    assert out.strip() == "x^-1 + q + x"
    code, out = run_cli(
        capsys, "basis", "--kind", "twisted_pos", "--n", "2", "--format", "json"
    )
    doc = json.loads(out)
    assert doc["count"] == 6


def test_ctable(capsys):
    code, out = run_cli(capsys, "ctable", "--family", "A2", "--r", "2", "--max-n", "1")
    doc = json.loads(out)
    assert len(doc["values"]) == 4
    by_key = {(r["k22"], r["k12"], r["k11"]): r["text"] for r in doc["values"]}
    assert by_key[(0, 1, 0)] == "q"


def test_fusion_cli(capsys):
    code, out = run_cli(
        capsys, "fusion", "--n", "2", "--points", "1,2", "--twisted", "--format", "json"
    )
    doc = json.loads(out)
    assert doc["dimension"] == 9


def test_limitchar_cli(capsys):
    code, out = run_cli(
        capsys, "limitchar", "--kind", "untwisted", "--qmax", "0", "--xmax", "1"
    )
    assert out.strip() == "x^-1 + 2 + x"


def test_verify_exit_zero_with_known_errata(capsys):
    code, out = run_cli(
        capsys, "verify", "--suite", "section4", "--max-n", "1", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    statuses = {(e["identity"], e["n"]): e["status"] for e in doc["entries"]}
    assert statuses[("pbw_twisted_vs_E_A2_tinf", 1)] == "KNOWN_ERRATUM"


def test_verify_text_warning_block(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "section4", "--max-n", "1")
    assert code == 0
    assert "WARNING" in out and "pbw_twisted_vs_E_A2_tinf" in out


def test_verify_exit_two_on_unknown_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(verify, "load_errata", lambda: {})
    code, out = run_cli(capsys, "verify", "--suite", "section4", "--max-n", "1")
    assert code == 2


def test_usage_error_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(["epoly", "--family", "bogus", "--n", "1", "--spec", "t0"])
    assert exc.value.code == 1


def test_json_round_trip_deterministic(capsys):
    code, first = run_cli(
        capsys, "epoly", "--family", "A2", "--n", "-2", "--spec", "t0", "--format", "json"
    )
    code, second = run_cli(
        capsys, "epoly", "--family", "A2", "--n", "-2", "--spec", "t0", "--format", "json"
    )
    assert first == second
    json.loads(first)
