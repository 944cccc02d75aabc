"""Entrywise comparison of Betti tables."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from betti.table import BettiTable
from errors import ConventionMismatchError


class Verdict(str, Enum):
    EQUAL = "equal"
    DOMINATED = "dominated"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Witness:
    i: int
    j: int
    left: int
    right: int


@dataclass
class DominanceReport:
    """``left <= right`` entrywise unless ``witnesses`` lists where ``left`` is larger."""

    left: BettiTable
    right: BettiTable
    verdict: Verdict
    witnesses: list[Witness] = field(default_factory=list)
    degree_hypothesis: bool | None = None

    @property
    def holds(self) -> bool:
        return self.verdict is not Verdict.INCOMPARABLE

    def to_json(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "degree_hypothesis": self.degree_hypothesis,
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "witnesses": [w.__dict__ for w in self.witnesses],
        }


def dominates(a: BettiTable, b: BettiTable) -> DominanceReport:
    """Report on ``a <= b`` entrywise."""
    if a.convention is not b.convention or a.n != b.n:
        raise ConventionMismatchError(
            f"cannot compare {a.convention.value}/n={a.n} with {b.convention.value}/n={b.n}"
        )
    right = b.as_dict()
    witnesses = [
        Witness(i, j, value, right.get((i, j), 0))
        for i, j, value in a.entries
        if value > right.get((i, j), 0)
    ]
    if a == b:
        verdict = Verdict.EQUAL
    elif witnesses:
        verdict = Verdict.INCOMPARABLE
    else:
        verdict = Verdict.DOMINATED
    return DominanceReport(a, b, verdict, witnesses)
