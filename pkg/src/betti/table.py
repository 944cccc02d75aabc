"""Betti tables: storage, arithmetic, Macaulay-notation display and JSON."""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Mapping

import pandas as pd

from errors import ConventionMismatchError, MalformedInputError


class BettiConvention(str, Enum):
    IDEAL = "ideal"
    QUOTIENT = "quotient"
    MODULE = "module"


@dataclass(frozen=True)
class BettiTable:
    """Finitely supported ``(i, j) -> beta_{i,j}``; zero entries are never stored."""

    n: int
    convention: BettiConvention
    entries: tuple[tuple[int, int, int], ...] = ()

    @classmethod
    def from_counts(
        cls, n: int, convention: BettiConvention, counts: Mapping[tuple[int, int], int]
    ) -> "BettiTable":
        for (i, j), b in counts.items():
            if b < 0:
                raise MalformedInputError(f"negative Betti number at ({i}, {j})")
        return cls(n, convention, tuple(sorted((i, j, b) for (i, j), b in counts.items() if b)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): b for i, j, b in self.entries}

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.as_dict().get(key, 0)

    def __add__(self, other: "BettiTable") -> "BettiTable":
        self._check_compatible(other)
        counts = self.as_dict()
        for i, j, b in other.entries:
            counts[(i, j)] = counts.get((i, j), 0) + b
        return BettiTable.from_counts(self.n, self.convention, counts)

    def shifted(self, degrees: int) -> "BettiTable":
        """Table of ``M(-degrees)``."""
        return BettiTable(
            self.n, self.convention, tuple((i, j + degrees, b) for i, j, b in self.entries)
        )

    def with_convention(self, convention: BettiConvention) -> "BettiTable":
        return BettiTable(self.n, convention, self.entries)

    def to_quotient(self, unit_ideal: bool = False) -> "BettiTable":
        """Table of ``S/I`` from the table of a nonzero ideal ``I``."""
        if self.convention is not BettiConvention.IDEAL:
            raise ConventionMismatchError(f"expected an ideal table, got {self.convention.value}")
        if unit_ideal:
            return BettiTable(self.n, BettiConvention.QUOTIENT)
        counts = {(i + 1, j): b for i, j, b in self.entries}
        counts[(0, 0)] = 1
        return BettiTable.from_counts(self.n, BettiConvention.QUOTIENT, counts)

    def total(self) -> int:
        return sum(b for _, _, b in self.entries)

    def generators(self) -> dict[int, int]:
        """Column 0 by internal degree."""
        return {j: b for i, j, b in self.entries if i == 0}

    def alternating_sum(self) -> dict[int, int]:
        """Coefficients of ``sum (-1)^i beta_{i,j} t^j``."""
        coefficients: dict[int, int] = {}
        for i, j, b in self.entries:
            coefficients[j] = coefficients.get(j, 0) + (-1) ** i * b
        return {j: c for j, c in coefficients.items() if c}

    def to_frame(self) -> pd.DataFrame:
        """Macaulay grid: index = row ``j - i``, columns = ``i``; missing entries are 0."""
        if not self.entries:
            return pd.DataFrame(dtype=object)
        frame = pd.DataFrame(
            [{"row": j - i, "i": i, "b": b} for i, j, b in self.entries]
        ).pivot(index="row", columns="i", values="b")
        rows = range(int(frame.index.min()), int(frame.index.max()) + 1)
        cols = range(0, int(frame.columns.max()) + 1)
        return frame.reindex(index=rows, columns=cols).fillna(0).astype(object)

    def to_json(self) -> dict[str, Any]:
        return {
            "convention": self.convention.value,
            "entries": [{"i": i, "j": j, "b": b} for i, j, b in self.entries],
        }

    def _check_compatible(self, other: "BettiTable") -> None:
        if self.convention is not other.convention or self.n != other.n:
            raise ConventionMismatchError(
                f"cannot combine {self.convention.value}/n={self.n} with "
                f"{other.convention.value}/n={other.n}"
            )


def format_table(table: BettiTable) -> str:
    """Macaulay notation: ``beta_{i,j}`` in column ``i``, row ``j - i``, ``-`` for zero."""
    frame = table.to_frame()
    if frame.empty:
        return ""
    labels = [f"{row}:" for row in frame.index]
    cells = [["-" if not v else str(int(v)) for v in frame.loc[row]] for row in frame.index]
    label_width = max(len(label) for label in labels)
    width = max(len(str(c)) for c in frame.columns)
    width = max([width] + [len(c) for line in cells for c in line])
    lines = [" " * label_width + "".join(f" {c:>{width}}" for c in frame.columns)]
    for label, line in zip(labels, cells):
        lines.append(label.rjust(label_width) + "".join(f" {c:>{width}}" for c in line))
    return "\n".join(lines)


_ROW_RE = re.compile(r"^\s*(-?\d+)\s*:\s*(.*)$")


def parse_table(text: str, n: int, convention: BettiConvention = BettiConvention.IDEAL) -> BettiTable:
    """Read rows like ``4: 3 3 1`` (``-`` = 0); a header line of column labels is optional."""
    counts: dict[tuple[int, int], int] = {}
    for line in _rows(text.splitlines()):
        match = _ROW_RE.match(line)
        if not match:
            raise MalformedInputError(f"bad Betti table row {line!r}")
        row = int(match.group(1))
        for i, cell in enumerate(match.group(2).split()):
            if cell == "-":
                continue
            if not cell.isdigit():
                raise MalformedInputError(f"bad Betti number {cell!r} in row {line!r}")
            counts[(i, row + i)] = int(cell)
    return BettiTable.from_counts(n, convention, counts)


def _rows(lines: Iterable[str]) -> Iterable[str]:
    for line in lines:
        if ":" in line:
            yield line


def k_polynomial_from_betti(table: BettiTable, length: int) -> list[int]:
    """First ``length`` coefficients of ``sum (-1)^i beta_{i,j}(S/I) t^j``."""
    if table.convention is BettiConvention.IDEAL:
        table = table.to_quotient()
    coefficients = table.alternating_sum()
    return [coefficients.get(j, 0) for j in range(length)]
