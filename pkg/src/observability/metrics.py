"""Pass/fail/skip counts of property campaigns."""
from __future__ import annotations

from typing import Iterable, Protocol

import pandas as pd


class _Tally(Protocol):
    passed: int
    failed: int
    skipped: int


class _Report(Protocol):
    suite: str
    properties: dict[str, _Tally]


def summarize(reports: Iterable[_Report]) -> pd.DataFrame:
    rows = [
        {
            "suite": report.suite,
            "property": name,
            "passed": tally.passed,
            "failed": tally.failed,
            "skipped": tally.skipped,
        }
        for report in reports
        for name, tally in sorted(report.properties.items())
    ]
    return pd.DataFrame(rows, columns=["suite", "property", "passed", "failed", "skipped"])


def format_summary(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "no properties checked"
    return frame.to_string(index=False)
