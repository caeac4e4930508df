from collections import Counter
from typing import Iterable

from src.checks.report import CheckReport


def summarize(reports: Iterable[CheckReport]) -> dict:
    """
    Totals for a finished sweep: all reports, per verdict, per check and verdict
    """
    reports = list(reports)

    by_verdict = Counter(r.verdict.value for r in reports)

    by_check: dict[str, Counter] = {}
    for r in reports:
        if r.check_id not in by_check:
            by_check[r.check_id] = Counter()
        by_check[r.check_id][r.verdict.value] += 1

    return {
        "total": len(reports),
        "by_verdict": dict(by_verdict),
        "by_check": {k: dict(v) for k, v in by_check.items()},
    }


def format_summary(summary: dict) -> str:
    verdicts = ", ".join(f"{k}={v}" for k, v in sorted(summary["by_verdict"].items()))
    lines = [f"[STATS] {summary['total']} reports ({verdicts or 'none'})"]
    for check_id, counts in summary["by_check"].items():
        detail = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        lines.append(f"[STATS]   {check_id}: {detail}")
    return "\n".join(lines)
