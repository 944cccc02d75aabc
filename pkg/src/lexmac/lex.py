"""Lex ideals from Hilbert functions (Macaulay's correspondence)."""
from __future__ import annotations

from loguru import logger

from errors import InfeasibleHilbertFunctionError, InsufficientBoundError
from lexmac.macaulay import macaulay_growth
from lexmac.order import lex_segment, shadow
from monomial.hilbert import HilbertFunction, TailMode, ring_dimension
from monomial.ideal import MonomialIdeal, normalize
from monomial.monomials import Monomial


def lex_ideal_from_hf(hf: HilbertFunction, bound: int) -> MonomialIdeal:
    """The unique lex ideal ``L`` with ``HF(S/L; j) = h_j`` for ``0 <= j <= bound``.

    Degrees past the given values are read from the tail. With a zero or constant tail the
    degree ``bound + 1`` must not need new minimal generators.
    """
    q = hf.to_quotient()
    n = q.n
    gens: list[Monomial] = []
    previous: set[Monomial] = set()
    for j in range(bound + 1):
        h_j = q.value(j)
        if j >= 2:
            growth = macaulay_growth(q.value(j - 1), j - 1)
            if h_j > growth:
                raise InfeasibleHilbertFunctionError(
                    f"h_{j}={h_j} exceeds the Macaulay bound {growth} from h_{j - 1}={q.value(j - 1)}",
                    degree=j,
                )
        segment = lex_segment(j, ring_dimension(n, j) - h_j, n)
        forced = shadow(previous, n)
        if not forced <= set(segment):
            raise InfeasibleHilbertFunctionError(
                f"degree {j}: the lex segment of size {len(segment)} does not contain the "
                f"{len(forced)} multiples of degree {j - 1}",
                degree=j,
            )
        gens.extend(m for m in segment if m not in forced)
        previous = set(segment)

    _check_tail(q, bound, previous)
    ideal = normalize(gens, n)
    logger.debug("lex_ideal_built n={} bound={} gens={}", n, bound, len(ideal.gens))
    return ideal


def _check_tail(q: HilbertFunction, bound: int, top: set[Monomial]) -> None:
    if q.tail is TailMode.OPEN:
        return
    nxt = bound + 1
    required = ring_dimension(q.n, nxt) - q.value(nxt)
    forced = len(shadow(top, q.n))
    if forced > required:
        raise InfeasibleHilbertFunctionError(
            f"degree {nxt}: the {q.tail.value} tail asks for {required} ideal monomials but "
            f"degree {bound} already forces {forced}",
            degree=nxt,
        )
    if forced < required:
        raise InsufficientBoundError(
            f"degree {nxt} still needs {required - forced} new generators; raise the bound past {bound}"
        )
