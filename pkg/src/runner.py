"""Run one command described by a RunConfig."""
from __future__ import annotations

import sys
from pathlib import Path
from typing import Any, Literal

from loguru import logger
from pydantic import BaseModel, ConfigDict

from betti.koszul import koszul_betti
from betti.spp import spp_betti
from betti.stable import ek_betti, is_stable
from betti.table import BettiTable, format_table
from bounds.bounds import minimal_power_sequence
from config.settings import Settings
from errors import LexpowError, NotArtinianError, UsageError
from lexmac.lex import lex_ideal_from_hf
from linkage.link import link
from lpp.decomposition import is_spp, is_xn_stable
from lpp.degrees import DegreeSequence
from lpp.lpp import is_lpp, lpp_degree_sequences, lpp_from_hf
from monomial.hilbert import HilbertFunction, hilbert_function
from monomial.ideal import MonomialIdeal, is_artinian
from monomial.text import format_ideal, ideal_to_json, read_ideal
from observability.logging import configure_logging
from observability.metrics import format_summary, summarize
from observability.report import render_json, write_report
from verification.reproduce import ReproductionReport, reproduce
from verification.suites import SuiteOptions, run_suite

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 5

Command = Literal["hilbert", "lex", "lpp", "betti", "link", "check", "verify", "reproduce"]


class RunConfig(BaseModel):
    """Everything a run depends on; equal configs give byte-identical output."""

    model_config = ConfigDict(frozen=True)

    command: Command
    ideal_path: Path | None = None
    hf: str | None = None
    tail: str = "open"
    n: int | None = None
    bound: int | None = None
    degrees: tuple[str, ...] = ()
    method: Literal["ek", "koszul", "spp"] = "koszul"
    output_format: Literal["grid", "json"] = "grid"
    json_output: bool = False
    seed: int | None = None
    trials: int | None = None
    cap: int | None = None
    max_degree: int | None = None
    suite: str | None = None
    example: str | None = None
    json_report: Path | None = None
    config_path: Path | None = None


def run(config: RunConfig, settings: Settings | None = None) -> int:
    settings = settings or Settings.load(config.config_path)
    configure_logging(settings.log_json, settings.log_level)
    handlers = {
        "hilbert": _hilbert,
        "lex": _lex,
        "lpp": _lpp,
        "betti": _betti,
        "link": _link,
        "check": _check,
        "verify": _verify,
        "reproduce": _reproduce,
    }
    try:
        return handlers[config.command](config, settings)
    except LexpowError as exc:
        logger.error("command_failed command={} error={}", config.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


def _lcm_cap(config: RunConfig, settings: Settings) -> int:
    return config.cap if config.cap is not None else settings.betti.lcm_cap


def _ideal(config: RunConfig) -> MonomialIdeal:
    if config.ideal_path is None:
        raise UsageError(f"{config.command} needs --ideal")
    return read_ideal(config.ideal_path)


def _hf(config: RunConfig) -> HilbertFunction:
    if config.hf is None or config.n is None:
        raise UsageError(f"{config.command} needs --hf and --n")
    return HilbertFunction.parse(config.hf, config.n, config.tail)


def _degrees(config: RunConfig, required: bool = True) -> DegreeSequence | None:
    if not config.degrees:
        if required:
            raise UsageError(f"{config.command} needs --degrees")
        return None
    return DegreeSequence.parse(config.degrees[0])


def _emit_ideal(config: RunConfig, ideal: MonomialIdeal) -> None:
    if config.json_output:
        sys.stdout.write(render_json(ideal_to_json(ideal)))
    else:
        sys.stdout.write(format_ideal(ideal))


def _emit_table(config: RunConfig, table: BettiTable) -> None:
    if config.json_output or config.output_format == "json":
        sys.stdout.write(render_json(table.to_json()))
    else:
        sys.stdout.write(format_table(table) + "\n")


def _hilbert(config: RunConfig, settings: Settings) -> int:
    ideal = _ideal(config)
    bound = config.bound if config.bound is not None else ideal.max_degree() + 1
    hf = hilbert_function(ideal, bound)
    if config.json_output:
        sys.stdout.write(render_json({"values": list(hf.values), "tail": hf.tail.value}))
    else:
        print(",".join(str(v) for v in hf.values) + f" tail={hf.tail.value}")
    return EXIT_OK


def _lex(config: RunConfig, settings: Settings) -> int:
    hf = _hf(config)
    _emit_ideal(config, lex_ideal_from_hf(hf, config.bound if config.bound is not None else hf.bound))
    return EXIT_OK


def _lpp(config: RunConfig, settings: Settings) -> int:
    hf = _hf(config)
    d = _degrees(config)
    bound = config.bound if config.bound is not None else hf.bound
    _emit_ideal(config, lpp_from_hf(hf, d, bound))
    return EXIT_OK


def _betti(config: RunConfig, settings: Settings) -> int:
    ideal = _ideal(config)
    cap = _lcm_cap(config, settings)
    if config.method == "ek":
        table = ek_betti(ideal)
    elif config.method == "spp":
        table = spp_betti(ideal, _degrees(config), cap)
    else:
        table = koszul_betti(ideal, cap)
    _emit_table(config, table)
    return EXIT_OK


def _link(config: RunConfig, settings: Settings) -> int:
    _emit_ideal(config, link(_ideal(config), _degrees(config)))
    return EXIT_OK


def _check(config: RunConfig, settings: Settings) -> int:
    ideal = _ideal(config)
    d = _degrees(config, required=False)
    facts: dict[str, Any] = {
        "stable": is_stable(ideal),
        "xn_stable": is_xn_stable(ideal),
        "artinian": is_artinian(ideal),
        "lpp_degree_sequences": [str(e) for e in lpp_degree_sequences(ideal)],
    }
    try:
        powers = minimal_power_sequence(ideal)
        facts["minimal_powers"] = str(powers.d)
        facts["minimal_powers_permutation"] = [i + 1 for i in powers.permutation]
    except NotArtinianError as exc:
        facts["minimal_powers"] = None
        facts["missing_power"] = None if exc.variable is None else exc.variable + 1
    if d is not None:
        facts["degrees"] = str(d)
        facts["spp"] = is_spp(ideal, d)
        facts["lpp"] = is_lpp(ideal, d)
        facts["growth_hypothesis"] = d.satisfies_growth_hypothesis()
    if config.json_output:
        sys.stdout.write(render_json(facts))
    else:
        for key in sorted(facts):
            print(f"{key}: {_plain(facts[key])}")
    return EXIT_OK


def _plain(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return " ".join(str(v) for v in value) if value else "-"
    return "-" if value is None else str(value)


def _verify(config: RunConfig, settings: Settings) -> int:
    if config.suite is None:
        raise UsageError("verify needs --suite")
    options = SuiteOptions.from_settings(
        settings,
        seed=config.seed,
        trials=config.trials,
        lcm_cap=config.cap,
        enumeration_cap=config.cap,
        max_degree=config.max_degree,
        variables=config.n,
        degrees=tuple(DegreeSequence.parse(raw) for raw in config.degrees) or None,
    )
    report = run_suite(config.suite, settings, options)
    if config.json_report is not None:
        write_report(report.to_json(), config.json_report)
    if config.json_output:
        sys.stdout.write(render_json(report.to_json()))
    else:
        print(format_summary(summarize([report])))
        print("PASS" if report.passed else f"FAIL counterexamples={len(report.counterexamples)}")
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def _reproduce(config: RunConfig, settings: Settings) -> int:
    if config.example is None:
        raise UsageError("reproduce needs an example name")
    name = config.example if config.example.startswith("example-") else f"example-{config.example}"
    report = reproduce(name, _lcm_cap(config, settings))
    if config.json_output:
        sys.stdout.write(
            render_json(
                {
                    "example": name,
                    "passed": report.passed,
                    "tables": [r.to_json() for r in report.results],
                }
            )
        )
    else:
        _print_reproduction(report)
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def _print_reproduction(report: ReproductionReport) -> None:
    for result in report.results:
        print(f"# {report.example} {result.name}")
        if result.actual is None:
            print(f"error: {result.error}")
            continue
        print(format_table(result.actual))
        for i, j, expected, actual in result.diff():
            print(f"diff beta_{i},{j}: expected {expected}, got {actual}")
    print("PASS" if report.passed else "FAIL")
