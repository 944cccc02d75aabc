"""Betti tables of stable-plus-powers ideals through the x_n-decomposition.

x_n is a non-zerodivisor on ``S`` and on ``I``, so ``beta^S(I) = beta^Sbar(I / x_n I)`` and

    beta(I / x_n I) = beta(I_0) + beta(V(⊕_{0<h<d_n} I_h / I_{h-1} (-h))) + beta(Sbar / I_{d_n - 1} (-d_n))

for a d-SPP ideal ``I``. Components are resolved recursively when they are SPP for ``d-bar``
and by the Koszul oracle otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass

from loguru import logger

from betti.koszul import DEFAULT_LCM_CAP, koszul_betti
from betti.table import BettiConvention, BettiTable
from betti.vector import GradedVectorSpaceHF, vbetti
from errors import MalformedInputError, NotSppError
from lpp.decomposition import decompose, is_spp
from lpp.degrees import DegreeSequence
from monomial import monomials as mono
from monomial.ideal import MonomialIdeal, contains


@dataclass(frozen=True)
class SppBettiTerms:
    """The three summands, all as ideal-convention tables over ``S``."""

    first: BettiTable
    middle: BettiTable
    last: BettiTable

    @property
    def total(self) -> BettiTable:
        return self.first + self.middle + self.last


def spp_betti_terms(
    ideal: MonomialIdeal, d: DegreeSequence, cap: int = DEFAULT_LCM_CAP
) -> SppBettiTerms:
    _check(ideal, d)
    n = ideal.n
    top = int(d.last)
    parts = decompose(ideal, top)
    dbar = d.truncated()

    first = _component_betti(parts.component(0), dbar, cap)

    dims: dict[int, int] = {}
    for h in range(1, top):
        lower = parts.component(h - 1)
        for g in parts.component(h).gens:
            if not contains(lower, g):
                dims[mono.degree(g) + h] = dims.get(mono.degree(g) + h, 0) + 1
    middle = vbetti(GradedVectorSpaceHF.from_mapping(dims), n - 1)

    closing = parts.component(top - 1)
    last = _component_betti(closing, dbar, cap).to_quotient(unit_ideal=closing.is_unit)
    last = last.shifted(top)

    return SppBettiTerms(
        first=_over_s(first, n),
        middle=_over_s(middle, n),
        last=_over_s(last, n),
    )


def spp_betti(ideal: MonomialIdeal, d: DegreeSequence, cap: int = DEFAULT_LCM_CAP) -> BettiTable:
    if ideal.is_unit:
        return BettiTable.from_counts(ideal.n, BettiConvention.IDEAL, {(0, 0): 1})
    if ideal.n == 1:
        _check(ideal, d)
        return _principal(ideal)
    table = spp_betti_terms(ideal, d, cap).total
    logger.debug("spp_betti d={} gens={} entries={}", d, len(ideal.gens), len(table.entries))
    return table


def _component_betti(component: MonomialIdeal, dbar: DegreeSequence, cap: int) -> BettiTable:
    if component.is_unit:
        return BettiTable.from_counts(component.n, BettiConvention.IDEAL, {(0, 0): 1})
    if component.is_zero:
        return BettiTable(component.n, BettiConvention.IDEAL)
    if component.n == 1:
        return _principal(component)
    if dbar.is_finite and is_spp(component, dbar):
        return spp_betti(component, dbar, cap)
    return koszul_betti(component, cap)


def _principal(ideal: MonomialIdeal) -> BettiTable:
    (g,) = ideal.gens
    return BettiTable.from_counts(ideal.n, BettiConvention.IDEAL, {(0, mono.degree(g)): 1})


def _over_s(table: BettiTable, n: int) -> BettiTable:
    return BettiTable(n, BettiConvention.IDEAL, table.entries)


def _check(ideal: MonomialIdeal, d: DegreeSequence) -> None:
    if d.n != ideal.n:
        raise MalformedInputError(f"degree sequence of length {d.n} for an ideal in {ideal.n} variables")
    if not d.is_finite:
        raise MalformedInputError(f"the decomposition formula needs a finite last degree, got {d}")
    if not is_spp(ideal, d):
        raise NotSppError(f"({ideal}) is not {d}-SPP")
