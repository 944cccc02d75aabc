"""Recompute the embedded example Betti tables and diff them against the stored ones."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml
from loguru import logger

from betti.koszul import DEFAULT_LCM_CAP
from betti.table import BettiTable, parse_table
from bounds.bounds import bhp_bound, lpp_bound
from errors import LexpowError, ResourceLimitError, UsageError
from lpp.degrees import DegreeSequence
from monomial.hilbert import HilbertFunction

EXAMPLES_PATH = Path(__file__).with_name("examples.yaml")


@dataclass(frozen=True)
class ExampleTable:
    name: str
    method: str
    expected: BettiTable
    degrees: DegreeSequence | None = None


@dataclass(frozen=True)
class Example:
    name: str
    hf: HilbertFunction
    bound: int
    tables: tuple[ExampleTable, ...]


@dataclass
class TableResult:
    example: str
    name: str
    expected: BettiTable
    actual: BettiTable | None = None
    error: str | None = None

    def diff(self) -> list[tuple[int, int, int, int]]:
        """``(i, j, expected, actual)`` for every entry that differs."""
        if self.actual is None:
            return []
        want, got = self.expected.as_dict(), self.actual.as_dict()
        return [
            (i, j, want.get((i, j), 0), got.get((i, j), 0))
            for i, j in sorted(set(want) | set(got))
            if want.get((i, j), 0) != got.get((i, j), 0)
        ]

    @property
    def matches(self) -> bool:
        return self.actual is not None and not self.diff()

    def to_json(self) -> dict[str, Any]:
        return {
            "example": self.example,
            "table": self.name,
            "matches": self.matches,
            "error": self.error,
            "actual": None if self.actual is None else self.actual.to_json(),
            "diff": [{"i": i, "j": j, "expected": e, "actual": a} for i, j, e, a in self.diff()],
        }


@dataclass
class ReproductionReport:
    example: str
    results: list[TableResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.matches for r in self.results)


def load_examples(path: Path = EXAMPLES_PATH) -> dict[str, Example]:
    raw = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    examples = {}
    for name, entry in raw.items():
        n = int(entry["n"])
        tables = tuple(
            ExampleTable(
                name=t["name"],
                method=t["method"],
                expected=parse_table(t["table"], n),
                degrees=DegreeSequence.parse(t["degrees"]) if "degrees" in t else None,
            )
            for t in entry["tables"]
        )
        examples[name] = Example(
            name=name,
            hf=HilbertFunction.parse(entry["hf"], n, entry.get("tail", "open")),
            bound=int(entry["bound"]),
            tables=tables,
        )
    return examples


def compute_table(example: Example, table: ExampleTable, cap: int = DEFAULT_LCM_CAP) -> BettiTable:
    if table.method == "lex":
        return bhp_bound(example.hf, example.bound)
    if table.method == "lpp" and table.degrees is not None:
        return lpp_bound(example.hf, table.degrees, example.bound, cap)
    raise UsageError(f"unknown table method {table.method!r} in {example.name}")


def reproduce(name: str, cap: int = DEFAULT_LCM_CAP) -> ReproductionReport:
    examples = load_examples()
    if name not in examples:
        raise UsageError(f"unknown example {name!r}; choose from {', '.join(sorted(examples))}")
    example = examples[name]
    report = ReproductionReport(example=name)
    for table in example.tables:
        result = TableResult(example=name, name=table.name, expected=table.expected)
        try:
            result.actual = compute_table(example, table, cap)
        except ResourceLimitError:
            raise
        except LexpowError as exc:
            result.error = str(exc)
            logger.warning("reproduce_failed example={} table={} error={}", name, table.name, exc)
        report.results.append(result)
    return report
