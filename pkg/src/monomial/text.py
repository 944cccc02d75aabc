"""Text and JSON encodings of monomial ideals.

Text grammar::

    ring n=3
    ideal: x1^3*x2, x3^4

An empty generator list after ``ideal:`` is the zero ideal; ``1`` is the unit monomial.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from errors import MalformedInputError
from monomial.ideal import MonomialIdeal, normalize
from monomial.monomials import Monomial

_RING_RE = re.compile(r"^ring\s*n\s*=\s*(\d+)$")
_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(term: str, n: int) -> Monomial:
    term = re.sub(r"\s+", "", term)
    if term == "1":
        return (0,) * n
    exps = [0] * n
    for factor in term.split("*"):
        match = _FACTOR_RE.match(factor)
        if not match:
            raise MalformedInputError(f"bad factor {factor!r} in term {term!r}")
        index = int(match.group(1))
        if not 1 <= index <= n:
            raise MalformedInputError(f"variable x{index} outside ring with n={n}")
        exps[index - 1] += int(match.group(2) or 1)
    return tuple(exps)


def parse_ideal(text: str) -> MonomialIdeal:
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if len(lines) != 2:
        raise MalformedInputError("expected a 'ring n=<int>' line followed by an 'ideal:' line")
    match = _RING_RE.match(lines[0])
    if not match:
        raise MalformedInputError(f"bad ring line {lines[0]!r}")
    n = int(match.group(1))
    if not lines[1].startswith("ideal:"):
        raise MalformedInputError(f"bad ideal line {lines[1]!r}")
    body = lines[1][len("ideal:") :].strip()
    terms = [t for t in body.split(",") if t.strip()] if body else []
    return normalize((parse_monomial(t, n) for t in terms), n)


def format_ideal(ideal: MonomialIdeal) -> str:
    body = str(ideal)
    return f"ring n={ideal.n}\nideal: {body}".rstrip() + "\n"


def read_ideal(path: Path) -> MonomialIdeal:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInputError(f"cannot read ideal file {path}: {exc}") from exc
    return parse_ideal(text)


def ideal_to_json(ideal: MonomialIdeal) -> dict[str, Any]:
    return {"n": ideal.n, "gens": [list(g) for g in ideal.gens]}


def ideal_from_json(payload: dict[str, Any] | str) -> MonomialIdeal:
    data = json.loads(payload) if isinstance(payload, str) else payload
    try:
        n = int(data["n"])
        gens = [tuple(int(e) for e in g) for g in data["gens"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad ideal JSON: {exc}") from exc
    return normalize(gens, n)
