"""Exhaustive enumeration of small monomial ideals.

Ideals are built degree by degree. Each degree part must contain the multiples of the previous
part, so a search node only chooses which of the remaining monomials of the current degree
join the ideal. ``cap`` bounds the number of search nodes visited.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from loguru import logger

from bounds.bounds import generator_degrees
from errors import MalformedInputError, ResourceLimitError
from lexmac.order import shadow
from lpp.degrees import DegreeSequence, power_ideal
from lpp.lpp import lpp_from_hf
from monomial import monomials as mono
from monomial.hilbert import HilbertFunction, TailMode, ring_dimension
from monomial.ideal import MonomialIdeal, contains, normalize
from monomial.monomials import Monomial

DEFAULT_ENUMERATION_CAP = 200_000


class _Budget:
    def __init__(self, cap: int) -> None:
        self.cap = cap
        self.count = 0

    def spend(self) -> None:
        self.count += 1
        if self.count > self.cap:
            raise ResourceLimitError(
                f"enumeration visited more than {self.cap} search nodes", count=self.count
            )


def enumerate_ideals(
    d: DegreeSequence,
    hf: HilbertFunction,
    bound: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[MonomialIdeal]:
    """Every monomial ideal ``I ⊇ ℘`` with ``HF(S/I; j) = h_j`` for ``j <= bound``."""
    q = hf.to_quotient()
    if q.n != d.n:
        raise MalformedInputError(
            f"degree sequence of length {d.n} for a Hilbert function in {q.n} variables"
        )
    top = _top_degree(d)
    targets: list[int | None] = []
    for j in range(top + 1):
        if j <= bound or q.tail is not TailMode.OPEN:
            targets.append(ring_dimension(d.n, j) - q.value(j))
        else:
            targets.append(None)
    yield from _search_artinian(d, targets, _Budget(cap))


def enumerate_artinian_ideals(
    d: DegreeSequence, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[MonomialIdeal]:
    """Every monomial ideal containing ``℘``, the whole ring included."""
    yield from _search_artinian(d, [None] * (_top_degree(d) + 1), _Budget(cap))


def _top_degree(d: DegreeSequence) -> int:
    if not d.is_finite:
        raise MalformedInputError(f"enumeration needs finite degrees, got {d}")
    # every monomial of degree s + 1 lies in ℘
    return d.socle_degree() + 1


def _search_artinian(
    d: DegreeSequence, targets: list[int | None], budget: _Budget
) -> Iterator[MonomialIdeal]:
    n = d.n
    powers = power_ideal(d)

    def walk(j: int, previous: set[Monomial], gens: list[Monomial]) -> Iterator[MonomialIdeal]:
        budget.spend()
        if j == len(targets):
            yield normalize(gens + list(powers.gens), n)
            return
        ms = mono.monomials_of_degree(n, j)
        forced = shadow(previous, n) | {m for m in ms if contains(powers, m)}
        free = [m for m in ms if m not in forced]
        target = targets[j]
        sizes = range(len(free) + 1) if target is None else [target - len(forced)]
        for size in sizes:
            if size < 0 or size > len(free):
                continue
            for extra in combinations(free, size):
                yield from walk(j + 1, forced | set(extra), gens + list(extra))

    yield from walk(0, set(), [])
    logger.debug("artinian_enumeration d={} nodes={}", d, budget.count)


def enumerate_stable_ideals(
    n: int, max_degree: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[MonomialIdeal]:
    """Every nonzero stable ideal in ``n`` variables generated in degrees ``<= max_degree``."""
    budget = _Budget(cap)

    def choices(ms: tuple[Monomial, ...], forced: set[Monomial]) -> Iterator[set[Monomial]]:
        # lex order: every x_i u / x_max(u) precedes u
        def branch(k: int, chosen: set[Monomial]) -> Iterator[set[Monomial]]:
            if k == len(ms):
                yield chosen
                return
            u = ms[k]
            if u in forced:
                yield from branch(k + 1, chosen | {u})
                return
            yield from branch(k + 1, chosen)
            if all(v in chosen for v in _stable_moves(u)):
                yield from branch(k + 1, chosen | {u})

        yield from branch(0, set())

    def walk(j: int, previous: set[Monomial], gens: list[Monomial]) -> Iterator[MonomialIdeal]:
        budget.spend()
        if j > max_degree:
            if gens:
                yield normalize(gens, n)
            return
        forced = shadow(previous, n)
        for part in choices(mono.monomials_of_degree(n, j), forced):
            yield from walk(j + 1, part, gens + sorted(part - forced, key=mono.canonical_key))

    yield from walk(0, set(), [])


def _stable_moves(u: Monomial) -> list[Monomial]:
    k = mono.last_variable(u)
    moves = []
    for i in range(max(k, 0)):
        moved = list(u)
        moved[i] += 1
        moved[k] -= 1
        moves.append(tuple(moved))
    return moves


@dataclass
class EghReport:
    """Generator counts of each enumerated ideal against those of the d-LPP ideal."""

    lpp: MonomialIdeal
    checked: int = 0
    witnesses: list[tuple[MonomialIdeal, int, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses


def egh_extremality(
    d: DegreeSequence,
    hf: HilbertFunction,
    bound: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> EghReport:
    """Whether the d-LPP ideal has the most minimal generators in each degree."""
    lpp = lpp_from_hf(hf, d, bound)
    reference = generator_degrees(lpp)
    report = EghReport(lpp=lpp)
    for ideal in enumerate_ideals(d, hf, bound, cap):
        report.checked += 1
        for j, count in sorted(generator_degrees(ideal).items()):
            if count > reference.get(j, 0):
                report.witnesses.append((ideal, j, count, reference.get(j, 0)))
    return report
