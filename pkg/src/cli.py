"""Command-line interface."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from pydantic import ValidationError

from runner import RunConfig, run
from verification.suites import SUITES


def _global_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", help="Print JSON instead of text")
    parent.add_argument("--seed", type=int, default=None)
    parent.add_argument("--max-degree", type=int, default=None, help="Largest random generator degree")
    parent.add_argument("--cap", type=int, default=None, help="Size cap for lcm lattices and searches")
    parent.add_argument("--config", type=Path, default=None, help="YAML file layered over the defaults")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = argparse.ArgumentParser(
        prog="lexpow",
        description="Monomial ideals, lex-plus-powers ideals and bounds on graded Betti numbers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    hilbert = sub.add_parser("hilbert", parents=[common], help="Hilbert function of S/I")
    hilbert.add_argument("--ideal", type=Path, required=True)
    hilbert.add_argument("--bound", type=int, default=None)

    for name, help_text in (("lex", "Lex ideal with a given Hilbert function"), ("lpp", "d-LPP ideal")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--hf", required=True, help='Values, e.g. "1,3,6,10,12"')
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--tail", default="open", help="zero, const:<c> or open")
        p.add_argument("--bound", type=int, default=None)
        if name == "lpp":
            p.add_argument("--degrees", required=True, help="e.g. 4,4,8 or 3,3,inf")

    betti = sub.add_parser("betti", parents=[common], help="Graded Betti table of an ideal")
    betti.add_argument("--ideal", type=Path, required=True)
    betti.add_argument("--method", choices=["ek", "koszul", "spp"], default="koszul")
    betti.add_argument("--degrees", default=None)
    betti.add_argument("--format", choices=["grid", "json"], default="grid")

    link = sub.add_parser("link", parents=[common], help="Direct link ℘ : I")
    link.add_argument("--ideal", type=Path, required=True)
    link.add_argument("--degrees", required=True)

    check = sub.add_parser("check", parents=[common], help="Stability, SPP and LPP properties")
    check.add_argument("--ideal", type=Path, required=True)
    check.add_argument("--degrees", default=None)

    verify = sub.add_parser("verify", parents=[common], help="Run a property campaign")
    verify.add_argument("--suite", choices=SUITES, required=True)
    verify.add_argument("--n", type=int, default=None, help="Variables for the stable-ideal oracle")
    verify.add_argument("--degrees", action="append", default=None, help="Repeatable")
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--json-report", type=Path, default=None)

    reproduce = sub.add_parser("reproduce", parents=[common], help="Recompute an embedded example")
    reproduce.add_argument("example", help="example-4.1, example-4.2 or example-4.3")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    degrees = getattr(args, "degrees", None)
    if isinstance(degrees, str):
        degrees = [degrees]
    return RunConfig(
        command=args.command,
        ideal_path=getattr(args, "ideal", None),
        hf=getattr(args, "hf", None),
        tail=getattr(args, "tail", "open"),
        n=getattr(args, "n", None),
        bound=getattr(args, "bound", None),
        degrees=tuple(degrees or ()),
        method=getattr(args, "method", "koszul"),
        output_format=getattr(args, "format", "grid"),
        json_output=args.json,
        seed=args.seed,
        trials=getattr(args, "trials", None),
        cap=args.cap,
        max_degree=args.max_degree,
        suite=getattr(args, "suite", None),
        example=getattr(args, "example", None),
        json_report=getattr(args, "json_report", None),
        config_path=args.config,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except ValidationError as exc:
        parser.error(str(exc))
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
