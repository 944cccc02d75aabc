"""Macaulay representations and the maximal growth of Hilbert functions."""
from __future__ import annotations

from math import comb

from errors import MalformedInputError


def macaulay_representation(a: int, j: int) -> list[tuple[int, int]]:
    """The ``j``-th Macaulay representation ``a = sum binomial(k_t, t)`` as ``[(k_t, t), ...]``.

    Computed greedily from the top binomial, so ``k_j > k_{j-1} > ... >= t``.
    """
    if a < 0 or j < 1:
        raise MalformedInputError(f"macaulay representation needs a >= 0 and j >= 1, got {a}, {j}")
    terms: list[tuple[int, int]] = []
    remaining = a
    t = j
    while remaining > 0 and t >= 1:
        k = t
        while comb(k + 1, t) <= remaining:
            k += 1
        terms.append((k, t))
        remaining -= comb(k, t)
        t -= 1
    return terms


def macaulay_growth(a: int, j: int) -> int:
    """``a^<j>``: the largest admissible ``HF(S/I; j+1)`` when ``HF(S/I; j) = a``."""
    return sum(comb(k + 1, t + 1) for k, t in macaulay_representation(a, j))
