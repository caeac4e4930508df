"""
Report stream writers: jsonl (schema-stable), csv and a plain tty table.
"""
from __future__ import annotations

import csv
import json
from typing import IO, Iterable, Iterator

from src.checks.report import JSONL_FIELDS, CheckReport

FORMATS = ("jsonl", "csv", "tty")
CSV_FIELDS = JSONL_FIELDS + ("detail",)


def _params_text(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def report_record(report: CheckReport, with_elapsed: bool = True) -> dict:
    """The jsonl record: exactly JSONL_FIELDS, in that order."""
    data = report.model_dump(mode="json")
    record = {name: data[name] for name in JSONL_FIELDS}
    if not with_elapsed:
        record["elapsed_ms"] = 0
    return record


def to_jsonl(report: CheckReport, with_elapsed: bool = True) -> str:
    return json.dumps(report_record(report, with_elapsed), ensure_ascii=False)


def to_tty(report: CheckReport, with_elapsed: bool = True) -> str:
    line = f"{report.verdict.value.upper():<15} {report.check_id:<16} {_params_text(report.params)}"
    if report.computed or report.expected:
        line += f"  computed={report.computed} expected={report.expected}"
    if with_elapsed:
        line += f"  ({report.elapsed_ms:.1f} ms)"
    if report.detail:
        line += f"  # {report.detail}"
    return line


def write_reports(
    reports: Iterable[CheckReport],
    stream: IO[str],
    fmt: str = "jsonl",
    with_elapsed: bool = True,
) -> Iterator[CheckReport]:
    """Write each report as it arrives and pass it through to the caller."""
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    writer = None
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
    for report in reports:
        if fmt == "jsonl":
            stream.write(to_jsonl(report, with_elapsed) + "\n")
        elif fmt == "csv":
            record = report_record(report, with_elapsed)
            writer.writerow(
                [record["check_id"], json.dumps(record["params"]), record["computed"], record["expected"],
                 record["verdict"], record["elapsed_ms"], report.detail]
            )
        else:
            stream.write(to_tty(report, with_elapsed) + "\n")
        stream.flush()
        yield report
