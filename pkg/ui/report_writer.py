"""
Report writer module for the character-sum lab
Renders scan records as CSV or JSON and suite reports as console status lines
"""

import csv
import io
import json
from typing import IO, Iterable, List, Optional, Sequence

from config import Output, config
from services.experiments import ScanRecord
from services.verification_suites import SuiteReport


def format_value(value, digits: Optional[int] = None) -> str:
    """CSV cell text; floats get `digits` significant digits, missing values stay blank"""
    digits = digits or config.get('output.significant_digits', Output.SIGNIFICANT_DIGITS)
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    if isinstance(value, (list, tuple)):
        return ".".join(str(v) for v in value)
    return str(value)


class ReportWriter:
    """
    Writes ScanRecords in the fixed column order; identical records give identical bytes
    """

    def __init__(self, fmt: str = "csv", digits: Optional[int] = None):
        if fmt not in ("csv", "json"):
            raise ValueError(f"unsupported output format '{fmt}'")
        self.fmt = fmt
        self.digits = digits or config.get('output.significant_digits', Output.SIGNIFICANT_DIGITS)

    def rows(self, records: Iterable[ScanRecord]) -> List[List[str]]:
        rows = []
        for record in records:
            data = record.to_dict()
            rows.append([format_value(data[column], self.digits) for column in Output.CSV_COLUMNS])
        return rows

    def write_csv(self, records: Iterable[ScanRecord], stream: IO[str]) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(Output.CSV_COLUMNS)
        writer.writerows(self.rows(records))

    def write_json(self, records: Iterable[ScanRecord], stream: IO[str]) -> None:
        payload = [record.to_dict() for record in records]
        json.dump(payload, stream, indent=2)
        stream.write("\n")

    def write(self, records: Sequence[ScanRecord], stream: IO[str]) -> None:
        if self.fmt == "csv":
            self.write_csv(records, stream)
        else:
            self.write_json(records, stream)

    def render(self, records: Sequence[ScanRecord]) -> str:
        buffer = io.StringIO()
        self.write(records, buffer)
        return buffer.getvalue()

    def save(self, records: Sequence[ScanRecord], path: str) -> None:
        with open(path, "w", newline="", encoding="utf-8") as f:
            self.write(records, f)


def status_line(ok: bool, message: str, warning: bool = False) -> str:
    if warning:
        return f"⚠ {message}"
    return f"{'✓' if ok else '✗'} {message}"


def render_suite(report: SuiteReport) -> str:
    """One status line per suite, then its notes indented"""
    worst = "n/a" if report.worst is None else f"{report.worst:.6g}"
    parts = [f"{report.name}: {report.passed}/{report.run} passed", f"{report.statistic} {worst}"]
    if report.slope is not None:
        parts.append(f"trend slope {report.slope:+.4f}{'' if report.trend_ok else ' (out of tolerance)'}")
    lines = [status_line(report.ok, ", ".join(parts))]
    lines.extend(f"    {note}" for note in report.notes)
    return "\n".join(lines)
