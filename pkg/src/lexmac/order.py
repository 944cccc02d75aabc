"""Lexicographic order and lex segments."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from errors import MalformedInputError
from monomial import monomials as mono
from monomial.hilbert import ring_dimension
from monomial.monomials import Monomial


def lex_compare(u: Monomial, v: Monomial) -> int:
    """1 if ``u >lex v``, -1 if ``u <lex v``, 0 if equal (x1 > x2 > ... > xn)."""
    for a, b in zip(u, v):
        if a != b:
            return 1 if a > b else -1
    return 0


@dataclass(frozen=True)
class LexSegment:
    """The ``count`` lex-largest monomials of degree ``degree`` in ``n`` variables."""

    degree: int
    count: int
    n: int

    def __post_init__(self) -> None:
        total = ring_dimension(self.n, self.degree)
        if not 0 <= self.count <= total:
            raise MalformedInputError(
                f"segment size {self.count} outside 0..{total} for degree {self.degree}, n={self.n}"
            )

    def monomials(self) -> tuple[Monomial, ...]:
        return mono.monomials_of_degree(self.n, self.degree)[: self.count]


def lex_segment(j: int, k: int, n: int) -> tuple[Monomial, ...]:
    return LexSegment(j, k, n).monomials()


def shadow(monomials: Iterable[Monomial], n: int) -> set[Monomial]:
    """All products ``x_i * m``."""
    return {mono.multiply(m, mono.variable(i, n)) for m in monomials for i in range(n)}
