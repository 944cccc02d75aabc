"""The x_n-decomposition ``I = I_0 + I_1 x_n + I_2 x_n^2 + ...`` and stable-plus-powers ideals."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from lpp.degrees import INF, DegreeSequence, power_ideal
from monomial import monomials as mono
from monomial.ideal import MonomialIdeal, contains, is_subset, normalize, times_variables
from monomial.monomials import Monomial


@dataclass(frozen=True)
class XnDecomposition:
    """Components ``I_0 ⊆ I_1 ⊆ ... ⊆ I_H`` in ``n - 1`` variables; ``I_h = I_H`` for ``h > H``."""

    n: int
    components: tuple[MonomialIdeal, ...]

    @property
    def bound(self) -> int:
        return len(self.components) - 1

    def component(self, h: int) -> MonomialIdeal:
        if h < 0:
            return MonomialIdeal.zero(self.n - 1)
        return self.components[min(h, self.bound)]

    def recombine(self) -> MonomialIdeal:
        return normalize(
            (g + (h,) for h, part in enumerate(self.components) for g in part.gens), self.n
        )


def xn_degree_bound(ideal: MonomialIdeal) -> int:
    """Largest x_n-exponent among the generators."""
    return max((g[-1] for g in ideal.gens), default=0)


def decompose(ideal: MonomialIdeal, bound: int | None = None) -> XnDecomposition:
    """``I_h`` is generated by the generators with x_n-exponent at most ``h``, x_n deleted."""
    if bound is None:
        bound = xn_degree_bound(ideal)
    components = tuple(
        normalize((g[:-1] for g in ideal.gens if g[-1] <= h), ideal.n - 1) for h in range(bound + 1)
    )
    return XnDecomposition(ideal.n, components)


def is_xn_stable(ideal: MonomialIdeal) -> bool:
    """Every ``x_i u / x_n`` with ``i < n`` lies in the ideal for each ``u`` divisible by x_n.

    Checking minimal generators suffices: a multiple ``w u`` maps to ``w (x_i u / x_n)``
    unless x_n divides ``w``, in which case ``x_i w u / x_n`` is a multiple of ``u``.
    """
    n = ideal.n
    for u in ideal.gens:
        if u[-1] == 0:
            continue
        for i in range(n - 1):
            if not contains(ideal, _move(u, i, n - 1)):
                return False
    return True


def is_spp(ideal: MonomialIdeal, d: DegreeSequence) -> bool:
    """``℘ ⊆ I`` and ``m_Sbar I_h ⊆ I_{h-1}`` for ``0 < h < d_n``.

    For ``d_n = INF`` the components are constant past the largest x_n-exponent, so the check
    stops there.
    """
    if not is_subset(power_ideal(d), ideal):
        return False
    top = xn_degree_bound(ideal) + 1 if d.last == INF else int(d.last)
    parts = decompose(ideal, max(top - 1, 0))
    for h in range(1, top):
        if not _maximal_ideal_times_within(parts.component(h), parts.component(h - 1)):
            return False
    return True


def xn_stable_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Smallest x_n-stable ideal containing ``ideal``."""
    last = ideal.n - 1
    return _close(ideal, lambda u: last if last > 0 and u[last] else None)


def stable_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Smallest stable ideal (Eliahou-Kervaire sense) containing ``ideal``."""
    return _close(ideal, lambda u: mono.last_variable(u) if mono.last_variable(u) > 0 else None)


def _close(ideal: MonomialIdeal, pivot: Callable[[Monomial], int | None]) -> MonomialIdeal:
    current = ideal
    while True:
        extra: list[Monomial] = []
        for u in current.gens:
            k = pivot(u)
            if k is None:
                continue
            extra.extend(_move(u, i, k) for i in range(k) if not contains(current, _move(u, i, k)))
        if not extra:
            return current
        current = normalize(current.gens + tuple(extra), ideal.n)


def _move(u: Monomial, i: int, k: int) -> Monomial:
    """``x_i * u / x_k``."""
    moved = list(u)
    moved[i] += 1
    moved[k] -= 1
    return tuple(moved)


def _maximal_ideal_times_within(upper: MonomialIdeal, lower: MonomialIdeal) -> bool:
    return is_subset(times_variables(upper, range(upper.n)), lower)
