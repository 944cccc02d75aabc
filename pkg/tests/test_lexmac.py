import numpy as np
import pytest

from betti.stable import is_stable
from bounds.sampling import random_monomial
from errors import InfeasibleHilbertFunctionError, InsufficientBoundError, MalformedInputError
from lexmac.lex import lex_ideal_from_hf
from lexmac.macaulay import macaulay_growth, macaulay_representation
from lexmac.order import lex_compare, lex_segment, shadow
from monomial import monomials as mono
from monomial.hilbert import HilbertFunction, hilbert_function
from monomial.ideal import contains, normalize


def realizable_hilbert_functions(seed, count=40):
    """Hilbert functions of random ideals, n <= 3, on windows 0..D with D <= 8."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, 4))
        bound = int(rng.integers(0, 9))
        gens = [random_monomial(n, 5, rng) for _ in range(int(rng.integers(1, 4)))]
        yield hilbert_function(normalize(gens, n), bound), bound


def test_lex_compare():
    assert lex_compare((2, 0), (1, 1)) == 1
    assert lex_compare((1, 0, 1), (0, 2, 0)) == 1
    assert lex_compare((0, 2, 0), (1, 0, 1)) == -1
    assert lex_compare((1, 1, 1), (1, 1, 1)) == 0


@pytest.mark.parametrize(
    "j,k,n,expected",
    [
        (2, 2, 2, ((2, 0), (1, 1))),
        (2, 0, 3, ()),
        (2, 2, 3, ((2, 0, 0), (1, 1, 0))),
    ],
)
def test_lex_segment(j, k, n, expected):
    assert lex_segment(j, k, n) == expected


def test_lex_segment_out_of_range():
    with pytest.raises(MalformedInputError):
        lex_segment(2, 4, 2)
    with pytest.raises(MalformedInputError):
        lex_segment(1, -1, 2)


def test_shadow():
    assert shadow([(1, 0)], 2) == {(2, 0), (1, 1)}


@pytest.mark.parametrize("j", [1, 2, 3, 7])
def test_growth_of_one_is_one(j):
    assert macaulay_growth(1, j) == 1


@pytest.mark.parametrize("a,j,expected", [(3, 1, 6), (6, 2, 10), (5, 2, 7), (0, 3, 0)])
def test_macaulay_growth(a, j, expected):
    assert macaulay_growth(a, j) == expected


def test_macaulay_representation():
    assert macaulay_representation(5, 2) == [(3, 2), (2, 1)]
    with pytest.raises(MalformedInputError):
        macaulay_representation(-1, 2)


def test_lex_ideal_from_small_hilbert_function():
    hf = HilbertFunction.parse("1,2,1,0", 2, "zero")
    lex = lex_ideal_from_hf(hf, 3)
    assert lex == normalize([(2, 0), (1, 1), (0, 3)], 2)
    assert hilbert_function(lex, 3).values == hf.values
    assert is_stable(lex)


def test_lex_ideal_of_full_ring_is_zero():
    assert lex_ideal_from_hf(HilbertFunction.parse("1,2,3,4", 2), 3).is_zero


def test_lex_ideal_rejects_growth_violation():
    with pytest.raises(InfeasibleHilbertFunctionError) as info:
        lex_ideal_from_hf(HilbertFunction.parse("1,1,2", 2), 2)
    assert info.value.degree == 2


def test_lex_ideal_needs_room_for_the_tail():
    with pytest.raises(InsufficientBoundError):
        lex_ideal_from_hf(HilbertFunction.parse("1,2,1", 2, "zero"), 2)


def test_lex_ideal_with_constant_tail():
    lex = lex_ideal_from_hf(HilbertFunction.parse("1,2,2,2", 2, "const:2"), 3)
    assert lex == normalize([(2, 0)], 2)


def test_lex_ideal_round_trip_and_shape():
    for hf, bound in realizable_hilbert_functions(3):
        lex = lex_ideal_from_hf(hf, bound)
        assert hilbert_function(lex, bound).values == hf.values
        previous = None
        for j in range(bound + 1):
            ms = mono.monomials_of_degree(hf.n, j)
            inside = [contains(lex, m) for m in ms]
            assert inside == sorted(inside, reverse=True)
            part = {m for m, flag in zip(ms, inside) if flag}
            if previous is not None:
                assert shadow(previous, hf.n) <= part
            previous = part


def test_macaulay_growth_is_sharp():
    for hf, bound in realizable_hilbert_functions(4):
        for j in range(1, bound):
            prefix = hf.values[: j + 1]
            growth = macaulay_growth(prefix[j], j)
            lex_ideal_from_hf(HilbertFunction(hf.n, (*prefix, growth)), j + 1)
            with pytest.raises((InfeasibleHilbertFunctionError, MalformedInputError)):
                lex_ideal_from_hf(HilbertFunction(hf.n, (*prefix, growth + 1)), j + 1)
