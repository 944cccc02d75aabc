"""Monomial ideals stored by their minimal generators."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from errors import MalformedInputError, UndefinedColonError
from monomial import monomials as mono
from monomial.monomials import Monomial


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generators in canonical order; equality of ideals is equality of this value."""

    n: int
    gens: tuple[Monomial, ...]

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (mono.unit(n),))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (mono.unit(self.n),)

    def max_degree(self) -> int:
        return max((mono.degree(g) for g in self.gens), default=0)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return is_subset(self, other)

    def __lt__(self, other: "MonomialIdeal") -> bool:
        return is_subset(self, other) and self != other

    def __str__(self) -> str:
        return ", ".join(mono.format_monomial(g) for g in self.gens)


def normalize(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Drop generators divisible by other generators and sort the rest canonically."""
    candidates = []
    for g in gens:
        g = tuple(g)
        if len(g) != n:
            raise MalformedInputError(f"monomial {g} has {len(g)} exponents, expected {n}")
        if any(e < 0 for e in g):
            raise MalformedInputError(f"monomial {g} has a negative exponent")
        candidates.append(g)
    minimal: list[Monomial] = []
    for g in sorted(set(candidates), key=mono.canonical_key):
        # divisors of g have degree <= deg(g), so they were already kept
        if not any(mono.divides(h, g) for h in minimal):
            minimal.append(g)
    return MonomialIdeal(n, tuple(minimal))


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return any(mono.divides(g, m) for g in ideal.gens)


def is_subset(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    return all(contains(b, g) for g in a.gens)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(a, b)
    return normalize(a.gens + b.gens, a.n)


def intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(a, b)
    return normalize((mono.lcm(f, g) for f in a.gens for g in b.gens), a.n)


def colon_monomial(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    return normalize((mono.colon(g, m) for g in ideal.gens), ideal.n)


def colon(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """``a : b`` as the intersection of the principal colons over the generators of ``b``."""
    _check_same_ring(a, b)
    if b.is_zero:
        raise UndefinedColonError("colon by the zero ideal is undefined")
    result: MonomialIdeal | None = None
    for g in b.gens:
        part = colon_monomial(a, g)
        result = part if result is None else intersection(result, part)
    assert result is not None
    return result


def times_variables(ideal: MonomialIdeal, variables: Iterable[int]) -> MonomialIdeal:
    """The product ``(x_i : i in variables) * ideal``."""
    indices = list(variables)
    return normalize(
        (mono.multiply(g, mono.variable(i, ideal.n)) for g in ideal.gens for i in indices),
        ideal.n,
    )


def degree_part(ideal: MonomialIdeal, j: int) -> list[Monomial]:
    """Monomials of degree ``j`` in the ideal, lex-largest first."""
    return [m for m in mono.monomials_of_degree(ideal.n, j) if contains(ideal, m)]


def pure_power_exponent(ideal: MonomialIdeal, i: int) -> int | None:
    """Least ``e >= 1`` with ``x_i^e`` in the ideal, or None."""
    best: int | None = None
    for g in ideal.gens:
        if all(e == 0 for k, e in enumerate(g) if k != i):
            e = max(g[i], 1)
            best = e if best is None else min(best, e)
    return best


def is_artinian(ideal: MonomialIdeal) -> bool:
    return all(pure_power_exponent(ideal, i) is not None for i in range(ideal.n))


def _check_same_ring(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.n != b.n:
        raise MalformedInputError(f"ideals live in different rings (n={a.n} and n={b.n})")
