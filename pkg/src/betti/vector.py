"""Betti numbers of graded vector spaces ``V(M)`` (modules killed by the maximal ideal)."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

from betti.table import BettiConvention, BettiTable
from errors import MalformedInputError


@dataclass(frozen=True)
class GradedVectorSpaceHF:
    """Finitely supported ``j -> h_j``."""

    values: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, values: Mapping[int, int]) -> "GradedVectorSpaceHF":
        if any(v < 0 for v in values.values()):
            raise MalformedInputError("graded vector space dimensions must be nonnegative")
        return cls(tuple(sorted((j, v) for j, v in values.items() if v)))

    @property
    def length(self) -> int:
        return sum(v for _, v in self.values)


def vbetti(h: GradedVectorSpaceHF, m: int) -> BettiTable:
    """``beta_{i, a+i} = h_a * binom(m, i)``: one shifted Koszul complex per basis element."""
    counts: dict[tuple[int, int], int] = {}
    for a, v in h.values:
        for i in range(m + 1):
            counts[(i, a + i)] = counts.get((i, a + i), 0) + v * comb(m, i)
    return BettiTable.from_counts(m, BettiConvention.MODULE, counts)
