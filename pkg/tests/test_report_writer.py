import csv
import io
import json

import pytest

from config import Output
from services.experiments import paley_scan
from services.verification_suites import SuiteReport
from ui.report_writer import ReportWriter, format_value, render_suite, status_line


@pytest.fixture(scope="module")
def records():
    return paley_scan(13, threads=1)


def test_format_value():
    assert format_value(None) == ""
    assert format_value(1 / 3, 12) == "0.333333333333"
    assert format_value((1, 2), 12) == "1.2"
    assert format_value(7, 12) == "7"
    assert format_value("even", 12) == "even"


def test_csv_layout(records):
    text = ReportWriter("csv", digits=12).render(records)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == list(Output.CSV_COLUMNS)
    assert len(rows) == len(records) + 1
    five = dict(zip(rows[0], rows[1]))
    assert five["q"] == "5"
    assert five["M_over_sqrtq"] == "0.4472135955"
    assert five["psi_exps"] != ""
    seven = dict(zip(rows[0], rows[2]))
    assert seven["q"] == "7"
    assert seven["parity"] == "odd"
    assert seven["psi_modulus"] == "" and seven["t1_ratio"] == ""
    assert seven["gs_norm"] == ""


def test_csv_is_byte_stable(records):
    writer = ReportWriter("csv")
    assert writer.render(records) == writer.render(list(records))
    assert writer.render(records).endswith("\n")


def test_json_payload(records):
    payload = json.loads(ReportWriter("json").render(records))
    assert len(payload) == len(records)
    assert set(Output.CSV_COLUMNS) <= set(payload[0])
    assert "gs_eps_norm" in payload[0]
    assert payload[0]["psi_modulus"] is not None
    assert payload[1]["psi_modulus"] is None


def test_save(records, tmp_path):
    path = tmp_path / "out.csv"
    ReportWriter("csv").save(records, str(path))
    assert path.read_text(encoding="utf-8") == ReportWriter("csv").render(records)


def test_rejects_unknown_format():
    with pytest.raises(ValueError):
        ReportWriter("xml")


def test_status_lines():
    assert status_line(True, "done") == "✓ done"
    assert status_line(False, "bad") == "✗ bad"
    assert status_line(True, "hmm", warning=True) == "⚠ hmm"


def test_render_suite():
    report = SuiteReport("polya", run=3, passed=3, worst=0.25, slope=0.01, notes=["extra"])
    text = render_suite(report)
    assert text.startswith("✓ polya: 3/3 passed")
    assert "trend slope +0.0100" in text
    assert text.endswith("    extra")
    failing = SuiteReport("gauss", run=2, passed=1)
    assert render_suite(failing).startswith("✗ gauss: 1/2 passed")
