"""Monomials as exponent tuples.

A monomial in ``n`` variables is the tuple of its exponents, ``(a_1, ..., a_n)``.
The unit monomial is the all-zero tuple. Variables are 0-indexed in code and
printed 1-indexed (``x1`` is index 0).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

Monomial = tuple[int, ...]


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(i: int, n: int, power: int = 1) -> Monomial:
    """Return ``x_{i+1}^power`` in ``n`` variables."""
    exps = [0] * n
    exps[i] = power
    return tuple(exps)


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def colon(a: Monomial, b: Monomial) -> Monomial:
    """Generator of the principal colon ``(a) : b``, i.e. ``x^max(a - b, 0)``."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def last_variable(m: Monomial) -> int:
    """Largest index of a variable dividing ``m``; -1 for the unit monomial."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i
    return -1


def canonical_key(m: Monomial) -> tuple[int, Monomial]:
    """Sort key: by degree, then lex-descending within a degree."""
    return degree(m), tuple(-e for e in m)


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, j: int) -> tuple[Monomial, ...]:
    """All degree-``j`` monomials in ``n`` variables, lex-largest first."""
    return tuple(_descend(n, j))


def _descend(n: int, j: int) -> Iterator[Monomial]:
    if n == 0:
        if j == 0:
            yield ()
        return
    if n == 1:
        yield (j,)
        return
    for first in range(j, -1, -1):
        for rest in _descend(n - 1, j - first):
            yield (first,) + rest


def format_monomial(m: Monomial) -> str:
    factors = []
    for i, e in enumerate(m):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors) if factors else "1"
