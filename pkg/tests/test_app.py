import csv

import pytest

from app import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, CharLabApp
from config import Config, Output


@pytest.fixture
def app(tmp_path):
    return CharLabApp(Config(str(tmp_path / "charlab.json")))


def test_delta_prints_value(app, capsys):
    assert app.run(["delta", "--g", "3"]) == EXIT_OK
    assert capsys.readouterr().out.strip().startswith("0.1730066")


def test_delta_rejects_even_order(app, capsys):
    assert app.run(["delta", "--g", "4"]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("✗")


def test_bad_arguments(app):
    assert app.run([]) == EXIT_USAGE
    assert app.run(["delta"]) == EXIT_USAGE
    assert app.run(["delta", "--g", "three"]) == EXIT_USAGE
    assert app.run(["frobnicate"]) == EXIT_USAGE


def test_help_exits_cleanly(app):
    assert app.run(["--help"]) == EXIT_OK


def test_suites_listing(app, capsys):
    assert app.run(["suites"]) == EXIT_OK
    names = capsys.readouterr().out.split()
    assert "polya" in names and names[-1] == "all"


def test_unknown_suite(app):
    assert app.run(["verify", "--suite", "nope"]) == EXIT_USAGE


def test_verify_delta(app, capsys):
    assert app.run(["verify", "--suite", "delta", "--seed", "3"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("✓ delta:")


def test_msum_quadratic_mod5(app, capsys):
    assert app.run(["msum", "--modulus", "5", "--char-index", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    lines = dict(line.split(None, 1) for line in out.splitlines() if line.startswith(("M ", "order")))
    assert lines["M"].strip() == "1"
    assert lines["order"].strip() == "2"


def test_msum_principal_is_rejected(app):
    assert app.run(["msum", "--modulus", "5", "--char-index", "0"]) == EXIT_USAGE
    assert app.run(["msum", "--modulus", "5", "--char-index", "9"]) == EXIT_USAGE


def test_scan_to_file(app, tmp_path, capsys):
    out = tmp_path / "cubic.csv"
    args = ["scan", "--order", "3", "--qmin", "7", "--qmax", "13", "--threads", "1", "--out", str(out)]
    assert app.run(args) == EXIT_OK
    rows = list(csv.reader(out.open(encoding="utf-8")))
    assert rows[0] == list(Output.CSV_COLUMNS)
    assert [row[0] for row in rows[1:]] == ["7", "7", "13", "13"]
    assert "✓" in capsys.readouterr().err


def test_scan_empty_range_warns(app, capsys):
    assert app.run(["scan", "--qmin", "5", "--qmax", "5", "--threads", "1"]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.strip() == ",".join(Output.CSV_COLUMNS)
    assert "⚠" in captured.err


def test_scan_rejects_inverted_range(app):
    assert app.run(["scan", "--qmin", "50", "--qmax", "10"]) == EXIT_USAGE


def test_scan_rejects_even_order(app):
    assert app.run(["scan", "--order", "4", "--qmin", "7", "--qmax", "20", "--threads", "1"]) == EXIT_USAGE


def test_paley_json(app, capsys):
    assert app.run(["paley", "--qmax", "20", "--format", "json", "--threads", "1"]) == EXIT_OK
    assert '"q": 19' in capsys.readouterr().out
    assert app.run(["paley", "--qmax", "3"]) == EXIT_USAGE


def test_verify_failure_maps_to_exit_one(app, monkeypatch):
    from services import verification_suites
    from services.verification_suites import SuiteReport

    monkeypatch.setitem(verification_suites.SUITES, "delta",
                        lambda seed: SuiteReport("delta", run=1, passed=0))
    assert app.run(["verify", "--suite", "delta"]) == EXIT_FAILURE
