"""Recursive characterization of LPP ideals, checked against explicit adversaries.

``L`` is d-LPP exactly when (i) it is d-SPP, (ii) each component ``L_i`` is d-bar-LPP and
(iii) every d-SPP ideal ``I`` with the same Hilbert function has, for all ``i, p``,
``sum_{j<=i} HF(I_j; p-j) >= sum_{j<=i} HF(L_j; p-j)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from loguru import logger

from lpp.decomposition import XnDecomposition, decompose, is_spp, xn_degree_bound
from lpp.degrees import INF, DegreeSequence
from lpp.lpp import is_lpp
from monomial.hilbert import hilbert_function, ideal_dimension
from monomial.ideal import MonomialIdeal


@dataclass
class PartialSumViolation:
    adversary: int
    i: int
    p: int
    adversary_sum: int
    lpp_sum: int


@dataclass
class LppCharacterizationReport:
    is_spp: bool
    components_lpp: bool
    violations: list[PartialSumViolation] = field(default_factory=list)
    precondition_failures: list[str] = field(default_factory=list)
    comparisons: int = 0

    @property
    def clauses_hold(self) -> bool:
        return self.is_spp and self.components_lpp and not self.violations

    @property
    def passed(self) -> bool:
        return self.clauses_hold and not self.precondition_failures


def check_lpp_characterization(
    lpp_ideal: MonomialIdeal,
    d: DegreeSequence,
    adversaries: list[MonomialIdeal],
    degree_bound: int | None = None,
) -> LppCharacterizationReport:
    ideals = [lpp_ideal, *adversaries]
    top = int(d.last) if d.last != INF else max(xn_degree_bound(i) for i in ideals)
    if degree_bound is None:
        degree_bound = max(i.max_degree() for i in ideals) + top + 1

    parts = decompose(lpp_ideal, top)
    dbar = d.truncated()
    report = LppCharacterizationReport(
        is_spp=is_spp(lpp_ideal, d),
        components_lpp=all(is_lpp(c, dbar) for c in parts.components),
    )
    if not is_lpp(lpp_ideal, d):
        report.precondition_failures.append(f"reference ideal is not {d}-LPP")
    reference_hf = hilbert_function(lpp_ideal, degree_bound).values
    reference = _partial_sums(parts, top, degree_bound)

    for index, adversary in enumerate(adversaries):
        if not is_spp(adversary, d):
            report.precondition_failures.append(f"adversary {index} is not {d}-SPP")
            continue
        if hilbert_function(adversary, degree_bound).values != reference_hf:
            report.precondition_failures.append(f"adversary {index} has a different Hilbert function")
            continue
        sums = _partial_sums(decompose(adversary, top), top, degree_bound)
        for (i, p), value in sums.items():
            report.comparisons += 1
            if value < reference[(i, p)]:
                report.violations.append(PartialSumViolation(index, i, p, value, reference[(i, p)]))

    logger.debug(
        "lpp_characterization_checked d={} adversaries={} violations={}",
        d,
        len(adversaries),
        len(report.violations),
    )
    return report


def _partial_sums(parts: XnDecomposition, top: int, degree_bound: int) -> dict[tuple[int, int], int]:
    sums: dict[tuple[int, int], int] = {}
    for p in range(degree_bound + 1):
        running = 0
        for i in range(top + 1):
            running += ideal_dimension(parts.component(i), p - i)
            sums[(i, p)] = running
    return sums
