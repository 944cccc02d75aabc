"""Lex-plus-powers ideals: recognition and construction from a Hilbert function."""
from __future__ import annotations

from itertools import combinations_with_replacement

from loguru import logger

from errors import InsufficientBoundError, LppNonexistentError, MalformedInputError
from lexmac.order import shadow
from lpp.degrees import INF, DegreeSequence, power_ideal
from monomial import monomials as mono
from monomial.hilbert import HilbertFunction, TailMode, hilbert_function, ring_dimension
from monomial.ideal import MonomialIdeal, contains, is_subset, normalize
from monomial.monomials import Monomial


def is_lpp(ideal: MonomialIdeal, d: DegreeSequence) -> bool:
    """Whether ``I = L + ℘`` for a lex ideal ``L``.

    Equivalent test: ``℘ ⊆ I`` and, in each degree up to the largest generator degree, every
    monomial lex-above a non-power element of ``I`` is in ``I``. The lex ideal generated by
    these initial segments then satisfies ``I = L + ℘``.
    """
    if d.n != ideal.n:
        raise MalformedInputError(f"degree sequence of length {d.n} for an ideal in {ideal.n} variables")
    powers = power_ideal(d)
    if not is_subset(powers, ideal):
        return False
    for j in range(ideal.max_degree() + 1):
        ms = mono.monomials_of_degree(ideal.n, j)
        last = -1
        for index, m in enumerate(ms):
            if contains(ideal, m) and not contains(powers, m):
                last = index
        if last > 0 and not all(contains(ideal, m) for m in ms[:last]):
            return False
    return True


def lpp_from_hf(hf: HilbertFunction, d: DegreeSequence, bound: int) -> MonomialIdeal:
    """The unique d-LPP ideal with ``HF(S/I; j) = h_j`` on ``0..bound``.

    Degree ``j`` of a d-LPP ideal is a lex segment together with the degree-``j`` powers, of
    prescribed size; the smallest such segment is the only candidate. If the candidate degrees
    do not fit together into an ideal, no d-LPP ideal exists.
    """
    q = hf.to_quotient()
    n = q.n
    if d.n != n:
        raise MalformedInputError(
            f"degree sequence of length {d.n} for a Hilbert function in {n} variables"
        )
    powers = power_ideal(d)
    gens: list[Monomial] = []
    previous: set[Monomial] = set()
    for j in range(bound + 1):
        chosen = _degree_part(q, powers, j)
        forced = shadow(previous, n)
        if not forced <= chosen:
            raise LppNonexistentError(
                f"degree {j}: the {d}-LPP candidate misses "
                f"{len(forced - chosen)} multiples of degree {j - 1}",
                degree=j,
            )
        gens.extend(m for m in chosen if m not in forced)
        previous = chosen

    candidate = normalize(gens + list(powers.gens), n)
    _check_tail(q, powers, candidate, bound, previous)
    if hilbert_function(candidate, bound).values != q.window(bound) or not is_lpp(candidate, d):
        raise LppNonexistentError(f"the {d}-LPP candidate does not realize the Hilbert function")
    logger.debug("lpp_ideal_built d={} bound={} gens={}", d, bound, len(candidate.gens))
    return candidate


def _degree_part(q: HilbertFunction, powers: MonomialIdeal, j: int) -> set[Monomial]:
    ms = mono.monomials_of_degree(q.n, j)
    chosen = {m for m in ms if contains(powers, m)}
    required = ring_dimension(q.n, j) - q.value(j)
    if required < len(chosen):
        raise LppNonexistentError(
            f"degree {j}: the powers alone give {len(chosen)} monomials but h_{j}={q.value(j)} "
            f"allows only {required}",
            degree=j,
        )
    for m in ms:
        if len(chosen) == required:
            break
        chosen.add(m)
    return chosen


def _check_tail(
    q: HilbertFunction,
    powers: MonomialIdeal,
    candidate: MonomialIdeal,
    bound: int,
    top: set[Monomial],
) -> None:
    if q.tail is TailMode.OPEN:
        return
    nxt = bound + 1
    required = ring_dimension(q.n, nxt) - q.value(nxt)
    forced = shadow(top, q.n) | {m for m in mono.monomials_of_degree(q.n, nxt) if contains(powers, m)}
    if len(forced) > required:
        raise LppNonexistentError(
            f"degree {nxt}: the {q.tail.value} tail allows {required} ideal monomials, "
            f"{len(forced)} are forced",
            degree=nxt,
        )
    if len(forced) < required:
        raise InsufficientBoundError(
            f"degree {nxt} still needs {required - len(forced)} new generators; raise the bound past {bound}"
        )
    late = [p for p in powers.gens if mono.degree(p) > nxt and not contains(candidate, p)]
    if late:
        raise InsufficientBoundError(
            f"power {mono.format_monomial(late[0])} lies past the window and changes the tail"
        )


def lpp_degree_sequences(ideal: MonomialIdeal, top: int | None = None) -> list[DegreeSequence]:
    """Every degree sequence with finite entries ``<= top`` (or infinite) for which ``I`` is d-LPP.

    ``top`` defaults to the largest generator degree plus one.
    """
    if top is None:
        top = ideal.max_degree() + 1
    choices: list[int | float] = list(range(1, top + 1)) + [INF]
    found = []
    for entries in combinations_with_replacement(choices, ideal.n):
        d = DegreeSequence(tuple(entries))
        if is_lpp(ideal, d):
            found.append(d)
    return found
