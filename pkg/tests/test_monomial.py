import json

import numpy as np
import pytest

from bounds.sampling import random_monomial
from errors import InsufficientBoundError, MalformedInputError, UndefinedColonError
from monomial import monomials as mono
from monomial.hilbert import (
    Convention,
    HilbertFunction,
    TailMode,
    hilbert_function,
    ideal_dimension,
    k_polynomial,
    ring_dimension,
)
from monomial.ideal import (
    MonomialIdeal,
    colon,
    contains,
    degree_part,
    intersection,
    is_artinian,
    is_subset,
    normalize,
    pure_power_exponent,
    times_variables,
)
from monomial.text import format_ideal, ideal_from_json, ideal_to_json, parse_ideal, read_ideal


def ideal(n, *gens):
    return normalize(gens, n)


def random_ideal(rng, n, max_degree=5, generators=3):
    count = int(rng.integers(1, generators + 1))
    return normalize([random_monomial(n, max_degree, rng) for _ in range(count)], n)


def test_normalize_drops_multiples_and_sorts():
    assert normalize([(2, 0), (2, 1)], 2).gens == ((2, 0),)
    assert normalize([], 2).is_zero
    assert normalize([(1, 1), (0, 2), (1, 3)], 2).gens == ((1, 1), (0, 2))
    # degree first, then lex-largest first
    assert normalize([(0, 3), (1, 1), (2, 0)], 2).gens == ((2, 0), (1, 1), (0, 3))


def test_normalize_is_idempotent():
    once = normalize([(3, 0, 1), (0, 0, 4), (1, 2, 0), (1, 2, 5)], 3)
    assert normalize(once.gens, 3) == once


def test_normalize_rejects_bad_monomials():
    with pytest.raises(MalformedInputError):
        normalize([(1, 2, 3)], 2)
    with pytest.raises(MalformedInputError):
        normalize([(1, -1)], 2)


@pytest.mark.parametrize(
    "m,expected",
    [((1, 1), False), ((2, 1), True), ((0, 2), True), ((0, 0), False)],
)
def test_contains(m, expected):
    assert contains(ideal(2, (2, 0), (0, 2)), m) is expected


def test_zero_and_unit_ideals():
    assert not contains(MonomialIdeal.zero(2), (5, 5))
    assert contains(MonomialIdeal.unit(2), (0, 0))
    assert MonomialIdeal.unit(3).is_unit
    assert normalize([(0, 0), (1, 0)], 2).is_unit


def test_colon_examples():
    square = ideal(2, (2, 0), (0, 2))
    assert colon(square, ideal(2, (1, 0))) == ideal(2, (1, 0), (0, 2))
    assert colon(square, MonomialIdeal.unit(2)) == square
    assert colon(ideal(2, (2, 1)), ideal(2, (0, 1))) == ideal(2, (2, 0))


def test_colon_by_zero_ideal_is_undefined():
    with pytest.raises(UndefinedColonError):
        colon(ideal(2, (1, 0)), MonomialIdeal.zero(2))


def test_colon_by_two_generators_intersects():
    square = ideal(2, (2, 0), (0, 2))
    assert colon(square, ideal(2, (1, 0), (0, 1))) == ideal(2, (2, 0), (1, 1), (0, 2))


def test_intersection_uses_lcms():
    assert intersection(ideal(2, (1, 0)), ideal(2, (0, 1))) == ideal(2, (1, 1))


def test_ideals_in_different_rings_are_rejected():
    with pytest.raises(MalformedInputError):
        colon(ideal(2, (1, 0)), ideal(3, (1, 0, 0)))


def test_monomials_of_degree_are_lex_descending():
    assert mono.monomials_of_degree(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert mono.monomials_of_degree(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert mono.monomials_of_degree(3, 0) == ((0, 0, 0),)


def test_ring_dimension():
    assert ring_dimension(3, 4) == 15
    assert ring_dimension(1, 7) == 1
    assert ring_dimension(2, -1) == 0


@pytest.mark.parametrize(
    "gens,expected",
    [
        (((2, 0), (0, 2)), (1, 2, 1, 0)),
        ((), (1, 2, 3, 4)),
        (((2, 0), (1, 1), (0, 3)), (1, 2, 1, 0)),
    ],
)
def test_hilbert_function(gens, expected):
    hf = hilbert_function(normalize(gens, 2), 3)
    assert hf.values == expected


def test_hilbert_function_tail_modes():
    assert hilbert_function(ideal(2, (2, 0), (0, 2)), 3).tail is TailMode.ZERO
    assert hilbert_function(ideal(2, (2, 0), (0, 2)), 2).tail is TailMode.OPEN
    assert hilbert_function(MonomialIdeal.zero(2), 3).tail is TailMode.OPEN
    with pytest.raises(MalformedInputError):
        hilbert_function(MonomialIdeal.zero(2), -1)


def test_ideal_dimension_is_complement():
    square = ideal(2, (2, 0), (0, 2))
    assert [ideal_dimension(square, j) for j in range(4)] == [0, 0, 2, 4]


def test_parse_hilbert_function_tails():
    hf = HilbertFunction.parse("1,3,6,10,11,12,11,11", 3, "const:11")
    assert hf.tail is TailMode.CONSTANT
    assert hf.value(40) == 11
    assert hf.extended(9).values == (1, 3, 6, 10, 11, 12, 11, 11, 11, 11)
    assert HilbertFunction.parse("1,2,1,0", 2, "zero").value(9) == 0
    with pytest.raises(InsufficientBoundError):
        HilbertFunction.parse("1,2,3", 2).value(3)


@pytest.mark.parametrize(
    "values,tail",
    [("1,x", "open"), ("", "open"), ("1,2", "sometimes"), ("1,2,2", "const:3"), ("1,3", "open")],
)
def test_parse_hilbert_function_rejects(values, tail):
    with pytest.raises(MalformedInputError):
        HilbertFunction.parse(values, 2, tail)


def test_ideal_convention_flip():
    hf = HilbertFunction.parse("1,2,1,0", 2, "zero")
    flipped = hf.to_ideal()
    assert flipped.convention is Convention.IDEAL
    assert flipped.values == (0, 0, 2, 4)
    assert flipped.value(5) == 6
    assert flipped.to_quotient().values == hf.values


def test_k_polynomial_of_complete_intersection():
    hf = hilbert_function(ideal(2, (2, 0), (0, 2)), 5)
    assert k_polynomial(hf, 5) == [1, 0, -2, 0, 1]


def test_pure_powers_and_artinian():
    i = ideal(3, (3, 0, 0), (0, 2, 1), (0, 0, 4))
    assert pure_power_exponent(i, 0) == 3
    assert pure_power_exponent(i, 1) is None
    assert not is_artinian(i)
    assert is_artinian(ideal(2, (1, 0), (0, 5)))


def test_degree_part():
    assert degree_part(ideal(2, (1, 0)), 2) == [(2, 0), (1, 1)]


def test_parse_and_format_ideal():
    text = "ring n=3\nideal: x3^4, x1^3 * x2, x1^3*x2^2\n"
    parsed = parse_ideal(text)
    assert parsed.gens == ((3, 1, 0), (0, 0, 4))
    assert format_ideal(parsed) == "ring n=3\nideal: x1^3*x2, x3^4\n"
    assert parse_ideal(format_ideal(parsed)) == parsed


def test_zero_and_unit_ideal_text():
    assert parse_ideal("ring n=2\nideal:\n").is_zero
    assert format_ideal(MonomialIdeal.zero(2)) == "ring n=2\nideal:\n"
    assert parse_ideal("ring n=2\nideal: 1").is_unit


@pytest.mark.parametrize(
    "text",
    ["ideal: x1", "ring n=2\nideal: x3", "ring n=2\nideal: y1", "ring 2\nideal: x1", "ring n=2\ngens: x1"],
)
def test_parse_ideal_rejects(text):
    with pytest.raises(MalformedInputError):
        parse_ideal(text)


def test_read_ideal(tmp_path):
    path = tmp_path / "ideal.txt"
    path.write_text("ring n=2\nideal: x1^2, x2^2\n", encoding="utf-8")
    assert read_ideal(path) == ideal(2, (2, 0), (0, 2))
    with pytest.raises(MalformedInputError):
        read_ideal(tmp_path / "missing.txt")


def test_ideal_json():
    i = ideal(2, (2, 0), (1, 1))
    payload = ideal_to_json(i)
    assert payload == {"n": 2, "gens": [[2, 0], [1, 1]]}
    assert ideal_from_json(json.dumps(payload)) == i
    with pytest.raises(MalformedInputError):
        ideal_from_json({"gens": [[1]]})


def test_times_variables():
    i = ideal(3, (1, 0, 0), (0, 2, 0))
    assert times_variables(i, [0, 1]) == ideal(3, (2, 0, 0), (1, 1, 0), (0, 3, 0))
    assert times_variables(i, [2]) == ideal(3, (1, 0, 1), (0, 2, 1))


def test_colon_matches_brute_force():
    rng = np.random.default_rng(5)
    for _ in range(40):
        n = int(rng.integers(1, 4))
        a, b = random_ideal(rng, n), random_ideal(rng, n)
        quotient = colon(a, b)
        assert is_subset(a, quotient)
        for g in quotient.gens:
            assert all(contains(a, mono.multiply(g, h)) for h in b.gens)
        for j in range(9):
            for m in mono.monomials_of_degree(n, j):
                expected = all(contains(a, mono.multiply(m, h)) for h in b.gens)
                assert contains(quotient, m) is expected


def test_hilbert_function_complements_ideal_dimension():
    rng = np.random.default_rng(6)
    for _ in range(30):
        n = int(rng.integers(1, 4))
        i = random_ideal(rng, n)
        bound = int(rng.integers(0, 9))
        hf = hilbert_function(i, bound)
        for j in range(bound + 1):
            assert hf.values[j] + ideal_dimension(i, j) == ring_dimension(n, j)


def test_text_format_round_trip():
    rng = np.random.default_rng(7)
    for _ in range(30):
        i = random_ideal(rng, int(rng.integers(1, 4)), generators=5)
        assert parse_ideal(format_ideal(i)) == i
        assert normalize(i.gens, i.n) == i
