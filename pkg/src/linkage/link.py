"""Direct links ``J = ℘ : I`` of Artinian monomial ideals."""
from __future__ import annotations

from dataclasses import dataclass, field

from loguru import logger

from errors import ContainmentViolationError, MalformedInputError
from lpp.decomposition import decompose, is_spp
from lpp.degrees import DegreeSequence, power_ideal
from lpp.lpp import is_lpp
from monomial.hilbert import HilbertFunction, TailMode, hilbert_function
from monomial.ideal import MonomialIdeal, colon, is_subset


@dataclass(frozen=True)
class LinkagePair:
    d: DegreeSequence
    ideal: MonomialIdeal
    linked: MonomialIdeal

    @property
    def socle_degree(self) -> int:
        return self.d.socle_degree()


def link(ideal: MonomialIdeal, d: DegreeSequence) -> MonomialIdeal:
    """``℘ : I`` for ``℘ ⊊ I ⊊ S``."""
    _check_linkable(ideal, d)
    linked = colon(power_ideal(d), ideal)
    logger.debug("linked d={} gens={} -> {}", d, len(ideal.gens), len(linked.gens))
    return linked


def link_pair(ideal: MonomialIdeal, d: DegreeSequence) -> LinkagePair:
    return LinkagePair(d, ideal, link(ideal, d))


def linked_hf(hf: HilbertFunction, d: DegreeSequence) -> HilbertFunction:
    """``j -> HF(S/℘; s-j) - h_{s-j}``, the Hilbert function of every direct link via ``℘``."""
    if not d.is_finite:
        raise MalformedInputError(f"linkage needs finite degrees, got {d}")
    q = hf.to_quotient()
    s = d.socle_degree()
    ci = hilbert_function(power_ideal(d), s).values
    values = q.window(s)
    for j, (v, c) in enumerate(zip(values, ci)):
        if v > c:
            raise MalformedInputError(f"h_{j}={v} exceeds HF(S/℘; {j})={c} for d={d}")
    if any(v for v in q.values[s + 1 :]) or (q.tail is TailMode.CONSTANT and q.constant):
        raise MalformedInputError(f"Hilbert function does not vanish past the socle degree {s}")
    return HilbertFunction(q.n, tuple(ci[s - j] - values[s - j] for j in range(s + 1)), TailMode.ZERO)


@dataclass
class LinkComponentsReport:
    d: DegreeSequence
    linked: MonomialIdeal
    component_mismatches: list[int] = field(default_factory=list)
    spp: tuple[bool, bool] = (False, False)
    lpp: tuple[bool, bool] = (False, False)

    @property
    def components_ok(self) -> bool:
        return not self.component_mismatches

    @property
    def spp_ok(self) -> bool:
        return self.spp[0] == self.spp[1]

    @property
    def lpp_ok(self) -> bool:
        return self.lpp[0] == self.lpp[1]

    @property
    def passed(self) -> bool:
        return self.components_ok and self.spp_ok and self.lpp_ok


def check_link_components(ideal: MonomialIdeal, d: DegreeSequence) -> LinkComponentsReport:
    """Component identity ``J_i = ℘bar : I_{d_n - i - 1}`` and the SPP/LPP biconditionals."""
    linked = link(ideal, d)
    top = int(d.last)
    dbar = d.truncated()
    powers_bar = power_ideal(dbar)
    parts_i = decompose(ideal, top)
    parts_j = decompose(linked, top)
    report = LinkComponentsReport(d=d, linked=linked)
    for i in range(top):
        component = parts_i.component(top - i - 1)
        expected = (
            MonomialIdeal.unit(ideal.n - 1) if component.is_zero else colon(powers_bar, component)
        )
        if parts_j.component(i) != expected:
            report.component_mismatches.append(i)
    # both directions are evaluated independently
    report.spp = (is_spp(ideal, d), is_spp(linked, d))
    report.lpp = (is_lpp(ideal, d), is_lpp(linked, d))
    return report


def _check_linkable(ideal: MonomialIdeal, d: DegreeSequence) -> None:
    if d.n != ideal.n:
        raise MalformedInputError(f"degree sequence of length {d.n} for an ideal in {ideal.n} variables")
    if not d.is_finite:
        raise MalformedInputError(f"linkage is only offered for finite degree sequences, got {d}")
    powers = power_ideal(d)
    if not is_subset(powers, ideal):
        raise ContainmentViolationError(f"℘ for d={d} is not contained in the ideal")
    if ideal == powers:
        raise ContainmentViolationError("the ideal equals ℘; the link would be the whole ring")
    if ideal.is_unit:
        raise ContainmentViolationError("the ideal is the whole ring")
