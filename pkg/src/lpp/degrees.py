"""Degree sequences and their pure-power ideals."""
from __future__ import annotations

import math
from dataclasses import dataclass

from errors import MalformedInputError
from monomial import monomials as mono
from monomial.ideal import MonomialIdeal, normalize

INF = math.inf


@dataclass(frozen=True)
class DegreeSequence:
    """``(d_1 <= ... <= d_n)`` with entries positive integers or ``INF`` (``x_i^INF = 0``)."""

    entries: tuple[int | float, ...]

    def __post_init__(self) -> None:
        for e in self.entries:
            if e != INF and (not float(e).is_integer() or e < 1):
                raise MalformedInputError(f"degree sequence entry {e!r} must be a positive int or inf")
        for a, b in zip(self.entries, self.entries[1:]):
            if a > b:
                raise MalformedInputError(f"degree sequence {self} is not weakly increasing")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def last(self) -> int | float:
        return self.entries[-1]

    @property
    def is_finite(self) -> bool:
        return all(e != INF for e in self.entries)

    def truncated(self) -> "DegreeSequence":
        """``d-bar``: the first ``n - 1`` entries."""
        return DegreeSequence(self.entries[:-1])

    def socle_degree(self) -> int:
        if not self.is_finite:
            raise MalformedInputError(f"{self} has infinite entries and no socle degree")
        return int(sum(self.entries)) - self.n

    def satisfies_growth_hypothesis(self) -> bool:
        """``d_i >= sum_{j<i} (d_j - 1) + 1`` for every ``i >= 3``."""
        for i in range(2, self.n):
            if self.entries[i] < sum(e - 1 for e in self.entries[:i]) + 1:
                return False
        return True

    def __le__(self, other: "DegreeSequence") -> bool:
        return self.n == other.n and all(a <= b for a, b in zip(self.entries, other.entries))

    def __str__(self) -> str:
        return ",".join("inf" if e == INF else str(int(e)) for e in self.entries)

    @classmethod
    def of(cls, *entries: int | float) -> "DegreeSequence":
        return cls(tuple(entries))

    @classmethod
    def parse(cls, raw: str) -> "DegreeSequence":
        entries: list[int | float] = []
        for part in raw.replace(" ", "").split(","):
            if not part:
                continue
            if part.lower() in {"inf", "infinity", "oo"}:
                entries.append(INF)
                continue
            try:
                entries.append(int(part))
            except ValueError as exc:
                raise MalformedInputError(f"bad degree sequence entry {part!r}") from exc
        if not entries:
            raise MalformedInputError("empty degree sequence")
        return cls(tuple(entries))


def power_ideal(d: DegreeSequence) -> MonomialIdeal:
    """``(x_1^{d_1}, ..., x_n^{d_n})``, infinite entries contributing nothing."""
    return normalize(
        (mono.variable(i, d.n, int(e)) for i, e in enumerate(d.entries) if e != INF), d.n
    )
