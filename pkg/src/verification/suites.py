"""Property campaigns: linkage, Betti oracles, the main theorem, EGH extremality, monotonicity.

Each suite tallies pass/fail/skip per property and keeps a certificate for every failure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

import numpy as np
from loguru import logger

from betti.koszul import koszul_betti
from betti.spp import spp_betti_terms
from betti.stable import ek_betti
from betti.table import BettiTable, k_polynomial_from_betti
from betti.vector import GradedVectorSpaceHF, vbetti
from bounds.bounds import bhp_bound, lpp_bound, verify_main_theorem
from bounds.dominance import dominates
from bounds.enumeration import (
    egh_extremality,
    enumerate_artinian_ideals,
    enumerate_stable_ideals,
)
from bounds.sampling import (
    random_artinian_ideal,
    random_proper_artinian_ideal,
    random_spp_ideal,
    random_stable_ideal,
)
from config.settings import Settings
from errors import InsufficientBoundError, LppNonexistentError, UsageError
from linkage.link import check_link_components, link, linked_hf
from lpp.decomposition import is_spp
from lpp.degrees import DegreeSequence
from monomial.hilbert import HilbertFunction, hilbert_function, k_polynomial
from monomial.ideal import MonomialIdeal
from monomial.text import ideal_to_json
from verification.reproduce import load_examples

SUITES = ("linkage", "betti-oracles", "main-theorem", "egh", "monotonicity")


@dataclass
class PropertyTally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0


@dataclass
class SuiteReport:
    suite: str
    properties: dict[str, PropertyTally] = field(default_factory=dict)
    counterexamples: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples and all(t.failed == 0 for t in self.properties.values())

    def record(self, prop: str, ok: bool, certificate: dict[str, Any] | None = None) -> None:
        tally = self.properties.setdefault(prop, PropertyTally())
        if ok:
            tally.passed += 1
            return
        tally.failed += 1
        self.counterexamples.append({"property": prop, **(certificate or {})})

    def skip(self, prop: str) -> None:
        self.properties.setdefault(prop, PropertyTally()).skipped += 1

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "properties": {name: t.__dict__ for name, t in sorted(self.properties.items())},
            "counterexamples": self.counterexamples,
        }


@dataclass(frozen=True)
class SuiteOptions:
    seed: int
    trials: int
    lcm_cap: int
    enumeration_cap: int
    max_degree: int | None = None
    extra_generators: int = 3
    variables: int = 3
    stable_max_degree: int = 4
    degrees: tuple[DegreeSequence, ...] = ()

    @classmethod
    def from_settings(cls, settings: Settings, **overrides: Any) -> "SuiteOptions":
        values = {
            "seed": settings.verify.seed,
            "trials": settings.verify.trials,
            "lcm_cap": settings.betti.lcm_cap,
            "enumeration_cap": settings.enumeration.cap,
            "max_degree": settings.sampling.max_degree,
            "extra_generators": settings.sampling.extra_generators,
            "variables": settings.verify.stable_variables,
            "stable_max_degree": settings.verify.stable_max_degree,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


def run_suite(name: str, settings: Settings, options: SuiteOptions) -> SuiteReport:
    runners: dict[str, Callable[[SuiteOptions, list[DegreeSequence]], SuiteReport]] = {
        "linkage": linkage_suite,
        "betti-oracles": betti_oracle_suite,
        "main-theorem": main_theorem_suite,
        "egh": egh_suite,
        "monotonicity": monotonicity_suite,
    }
    if name not in runners:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    defaults = {
        "linkage": settings.verify.linkage_degrees,
        "betti-oracles": settings.verify.spp_degrees,
        "main-theorem": settings.verify.main_theorem_degrees,
        "egh": settings.verify.main_theorem_degrees,
        "monotonicity": settings.verify.main_theorem_degrees,
    }[name]
    degrees = list(options.degrees) or [DegreeSequence.parse(raw) for raw in defaults]
    report = runners[name](options, degrees)
    logger.info(
        "suite_finished suite={} passed={} counterexamples={}",
        name,
        report.passed,
        len(report.counterexamples),
    )
    return report


def linkage_suite(options: SuiteOptions, degrees: list[DegreeSequence]) -> SuiteReport:
    report = SuiteReport("linkage")
    rng = np.random.default_rng(options.seed)
    for d in degrees:
        for _ in range(options.trials):
            ideal = random_proper_artinian_ideal(
                d, rng, options.max_degree, options.extra_generators
            )
            certificate = {"d": str(d), "ideal": ideal_to_json(ideal)}
            linked = link(ideal, d)
            report.record("double-link", link(linked, d) == ideal, certificate)
            s = d.socle_degree()
            expected = linked_hf(hilbert_function(ideal, s), d).values
            actual = hilbert_function(linked, s).values
            report.record("hilbert-identity", actual == expected, certificate)
            components = check_link_components(ideal, d)
            report.record("components", components.components_ok, certificate)
            report.record("spp-biconditional", components.spp_ok, certificate)
            report.record("lpp-biconditional", components.lpp_ok, certificate)
    return report


def betti_oracle_suite(options: SuiteOptions, degrees: list[DegreeSequence]) -> SuiteReport:
    report = SuiteReport("betti-oracles")
    rng = np.random.default_rng(options.seed)

    stable: list[MonomialIdeal] = []
    for n in range(1, options.variables + 1):
        stable.extend(enumerate_stable_ideals(n, options.stable_max_degree, options.enumeration_cap))
    stable.extend(
        random_stable_ideal(options.variables, rng, options.stable_max_degree)
        for _ in range(options.trials)
    )
    for ideal in stable:
        certificate = {"ideal": ideal_to_json(ideal)}
        ek = ek_betti(ideal)
        oracle = koszul_betti(ideal, options.lcm_cap)
        report.record(
            "ek-equals-koszul",
            ek == oracle,
            {**certificate, "ek": ek.to_json(), "koszul": oracle.to_json()},
        )
        _check_euler(report, ideal, oracle)

    for d in degrees:
        candidates = [i for i in enumerate_artinian_ideals(d, options.enumeration_cap) if is_spp(i, d)]
        candidates.extend(
            random_spp_ideal(d, rng, options.max_degree, options.extra_generators)
            for _ in range(options.trials)
        )
        for ideal in candidates:
            certificate = {"d": str(d), "ideal": ideal_to_json(ideal)}
            terms = spp_betti_terms(ideal, d, options.lcm_cap)
            oracle = koszul_betti(ideal, options.lcm_cap)
            total = terms.total
            report.record(
                "spp-equals-koszul",
                total == oracle,
                {**certificate, "spp": total.to_json(), "koszul": oracle.to_json()},
            )
            summands_ok = all(
                dominates(term, total).holds for term in (terms.first, terms.middle, terms.last)
            )
            report.record("summands-below-total", summands_ok, certificate)
            _check_euler(report, ideal, oracle)
            _check_vbetti(report, ideal, d, oracle)
    return report


def _check_euler(report: SuiteReport, ideal: MonomialIdeal, table: BettiTable) -> None:
    length = max((j for _, j, _ in table.entries), default=0) + 1
    lhs = k_polynomial_from_betti(table, length)
    rhs = k_polynomial(hilbert_function(ideal, length), length)
    report.record("euler-characteristic", lhs == rhs, {"ideal": ideal_to_json(ideal)})


def _check_vbetti(
    report: SuiteReport, ideal: MonomialIdeal, d: DegreeSequence, table: BettiTable
) -> None:
    """``beta(S/I) <= beta(V(S/I))`` entrywise for Artinian ``S/I``."""
    if ideal.is_unit:
        report.skip("vbetti-dominance")
        return
    quotient = table.to_quotient().as_dict()
    hf = hilbert_function(ideal, d.socle_degree())
    space = vbetti(GradedVectorSpaceHF.from_mapping(dict(enumerate(hf.values))), ideal.n).as_dict()
    ok = all(value <= space.get(key, 0) for key, value in quotient.items())
    report.record("vbetti-dominance", ok, {"ideal": ideal_to_json(ideal)})


def main_theorem_suite(options: SuiteOptions, degrees: list[DegreeSequence]) -> SuiteReport:
    report = SuiteReport("main-theorem")
    rng = np.random.default_rng(options.seed)
    for d in degrees:
        ideals: list[MonomialIdeal] = list(enumerate_artinian_ideals(d, options.enumeration_cap))
        ideals.extend(
            random_artinian_ideal(d, rng, options.max_degree, options.extra_generators)
            for _ in range(options.trials)
        )
        for ideal in ideals:
            try:
                dominance = verify_main_theorem(ideal, d, options.lcm_cap)
            except LppNonexistentError:
                report.skip("lpp-dominates")
                continue
            report.record(
                "lpp-dominates",
                dominance.holds,
                {"d": str(d), "ideal": ideal_to_json(ideal), **dominance.to_json()},
            )
    return report


def egh_suite(options: SuiteOptions, degrees: list[DegreeSequence]) -> SuiteReport:
    report = SuiteReport("egh")
    for d in degrees:
        window = d.socle_degree() + 1
        ideals = enumerate_artinian_ideals(d, options.enumeration_cap)
        for hf in _distinct_hilbert_functions(ideals, window):
            try:
                egh = egh_extremality(d, hf, window, options.enumeration_cap)
            except LppNonexistentError:
                report.skip("lpp-most-generators")
                continue
            report.record(
                "lpp-most-generators",
                egh.passed,
                {
                    "d": str(d),
                    "hf": list(hf.values),
                    "witnesses": [
                        {"ideal": ideal_to_json(i), "degree": j, "count": c, "lpp_count": r}
                        for i, j, c, r in egh.witnesses
                    ],
                },
            )
    return report


def monotonicity_suite(options: SuiteOptions, degrees: list[DegreeSequence]) -> SuiteReport:
    report = SuiteReport("monotonicity")
    example = load_examples()["example-4.3"]
    chain = [DegreeSequence.parse("3,3,3,inf"), DegreeSequence.parse("3,3,5,inf")]
    tables = [lpp_bound(example.hf, d, example.bound, options.lcm_cap) for d in chain]
    tables.append(bhp_bound(example.hf, example.bound))
    for smaller, larger in zip(tables, tables[1:]):
        report.record("example-chain", dominates(smaller, larger).holds, {"example": example.name})

    for d in degrees:
        window = d.socle_degree() + 1
        wider = DegreeSequence(d.entries[:-1] + (d.last + 1,))
        ideals = enumerate_artinian_ideals(d, options.enumeration_cap)
        for hf in _distinct_hilbert_functions(ideals, window):
            _compare(
                report,
                "lpp-below-lex",
                lambda: lpp_bound(hf, d, window, options.lcm_cap),
                lambda: bhp_bound(hf, window),
                hf,
            )
            _compare(
                report,
                "lpp-monotone-in-d",
                lambda: lpp_bound(hf, d, window, options.lcm_cap),
                lambda: lpp_bound(hf, wider, window, options.lcm_cap),
                hf,
            )
    return report


def _compare(
    report: SuiteReport,
    prop: str,
    smaller: Callable[[], BettiTable],
    larger: Callable[[], BettiTable],
    hf: HilbertFunction,
) -> None:
    try:
        left, right = smaller(), larger()
    except (LppNonexistentError, InsufficientBoundError):
        # not comparable: one of the LPP ideals does not exist
        report.skip(prop)
        return
    dominance = dominates(left, right)
    report.record(prop, dominance.holds, {"hf": list(hf.values), **dominance.to_json()})


def _distinct_hilbert_functions(ideals: Iterable[MonomialIdeal], window: int) -> list[HilbertFunction]:
    seen: dict[tuple[int, ...], HilbertFunction] = {}
    for ideal in ideals:
        hf = hilbert_function(ideal, window)
        seen.setdefault(hf.values, hf)
    return [seen[key] for key in sorted(seen)]
