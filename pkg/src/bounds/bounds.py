"""Upper bounds for graded Betti numbers: lex ideals and lex-plus-powers ideals."""
from __future__ import annotations

from dataclasses import dataclass

from loguru import logger

from betti.koszul import DEFAULT_LCM_CAP, koszul_betti
from betti.spp import spp_betti
from betti.stable import ek_betti
from betti.table import BettiTable
from bounds.dominance import DominanceReport, dominates
from errors import ContainmentViolationError, MalformedInputError, NotArtinianError
from lexmac.lex import lex_ideal_from_hf
from lpp.decomposition import is_spp
from lpp.degrees import DegreeSequence, power_ideal
from lpp.lpp import lpp_from_hf
from monomial import monomials as mono
from monomial.hilbert import HilbertFunction, hilbert_function
from monomial.ideal import MonomialIdeal, is_subset, pure_power_exponent


@dataclass(frozen=True)
class MinimalPowers:
    """``d`` sorted ascending; ``permutation[k]`` is the variable carrying ``d[k]``."""

    d: DegreeSequence
    permutation: tuple[int, ...]

    @property
    def in_order(self) -> bool:
        return self.permutation == tuple(range(len(self.permutation)))


def minimal_power_sequence(ideal: MonomialIdeal) -> MinimalPowers:
    exponents = []
    for i in range(ideal.n):
        e = pure_power_exponent(ideal, i)
        if e is None:
            raise NotArtinianError(f"no power of x{i + 1} lies in the ideal", variable=i)
        exponents.append(e)
    # stable sort keeps variables with equal exponents in their order
    permutation = tuple(sorted(range(ideal.n), key=lambda i: exponents[i]))
    return MinimalPowers(DegreeSequence(tuple(exponents[i] for i in permutation)), permutation)


def betti_table(
    ideal: MonomialIdeal, d: DegreeSequence | None = None, cap: int = DEFAULT_LCM_CAP
) -> BettiTable:
    """Decomposition formula when ``ideal`` is d-SPP for a finite ``d``, the Koszul oracle otherwise."""
    if d is not None and d.is_finite and is_spp(ideal, d):
        return spp_betti(ideal, d, cap)
    return koszul_betti(ideal, cap)


def bhp_bound(hf: HilbertFunction, bound: int) -> BettiTable:
    return ek_betti(lex_ideal_from_hf(hf, bound))


def lpp_bound(
    hf: HilbertFunction, d: DegreeSequence, bound: int, cap: int = DEFAULT_LCM_CAP
) -> BettiTable:
    """Betti table of the d-LPP ideal with Hilbert function ``hf``.

    With an infinite last degree the ideal is resolved through the minimal powers it contains
    when those are finite and already in order, and by the Koszul oracle otherwise.
    """
    ideal = lpp_from_hf(hf, d, bound)
    if d.is_finite or ideal.is_unit:
        return spp_betti(ideal, d, cap)
    try:
        powers = minimal_power_sequence(ideal)
    except NotArtinianError:
        return koszul_betti(ideal, cap)
    if powers.in_order:
        return betti_table(ideal, powers.d, cap)
    return koszul_betti(ideal, cap)


def verify_main_theorem(
    ideal: MonomialIdeal, d: DegreeSequence, cap: int = DEFAULT_LCM_CAP
) -> DominanceReport:
    """Compare ``beta(I)`` with the Betti table of the d-LPP ideal sharing its Hilbert function."""
    if d.n != ideal.n:
        raise MalformedInputError(f"degree sequence of length {d.n} for an ideal in {ideal.n} variables")
    if not d.is_finite:
        raise MalformedInputError(f"main theorem checks need finite degrees, got {d}")
    if not is_subset(power_ideal(d), ideal):
        raise ContainmentViolationError(f"℘ for d={d} is not contained in ({ideal})")
    window = d.socle_degree() + 1
    hf = hilbert_function(ideal, window)
    report = dominates(betti_table(ideal, d, cap), lpp_bound(hf, d, window, cap))
    report.degree_hypothesis = d.satisfies_growth_hypothesis()
    logger.debug(
        "main_theorem_checked d={} gens={} verdict={}",
        d,
        len(ideal.gens),
        report.verdict.value,
    )
    return report


def generator_degrees(ideal: MonomialIdeal) -> dict[int, int]:
    """``beta_{0,j}``: minimal generators counted by degree."""
    counts: dict[int, int] = {}
    for g in ideal.gens:
        counts[mono.degree(g)] = counts.get(mono.degree(g), 0) + 1
    return counts
