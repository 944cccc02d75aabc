"""Stable ideals and the Eliahou-Kervaire Betti numbers."""
from __future__ import annotations

from math import comb

from betti.table import BettiConvention, BettiTable
from errors import NotStableError
from monomial import monomials as mono
from monomial.ideal import MonomialIdeal, contains


def is_stable(ideal: MonomialIdeal) -> bool:
    """``x_i u / x_max(u)`` lies in the ideal for every generator ``u`` and ``i < max(u)``."""
    for u in ideal.gens:
        k = mono.last_variable(u)
        for i in range(max(k, 0)):
            moved = list(u)
            moved[i] += 1
            moved[k] -= 1
            if not contains(ideal, tuple(moved)):
                return False
    return True


def ek_betti(ideal: MonomialIdeal) -> BettiTable:
    """``beta_{i, deg u + i} = sum over generators u of binom(max(u) - 1, i)``."""
    if not is_stable(ideal):
        raise NotStableError(f"({ideal}) is not stable")
    counts: dict[tuple[int, int], int] = {}
    for u in ideal.gens:
        top = max(mono.last_variable(u), 0)
        d = mono.degree(u)
        for i in range(top + 1):
            counts[(i, d + i)] = counts.get((i, d + i), 0) + comb(top, i)
    return BettiTable.from_counts(ideal.n, BettiConvention.IDEAL, counts)
