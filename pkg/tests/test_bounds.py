import numpy as np
import pytest

from betti.koszul import koszul_betti
from betti.stable import is_stable
from betti.table import BettiConvention, BettiTable
from bounds.bounds import (
    betti_table,
    bhp_bound,
    generator_degrees,
    lpp_bound,
    minimal_power_sequence,
    verify_main_theorem,
)
from bounds.dominance import Verdict, dominates
from bounds.enumeration import (
    egh_extremality,
    enumerate_artinian_ideals,
    enumerate_ideals,
    enumerate_stable_ideals,
)
from bounds.sampling import (
    random_artinian_ideal,
    random_monomial,
    random_proper_artinian_ideal,
    random_spp_ideal,
    random_stable_ideal,
)
from errors import (
    ContainmentViolationError,
    ConventionMismatchError,
    MalformedInputError,
    NotArtinianError,
    ResourceLimitError,
)
from lpp.decomposition import is_spp
from lpp.degrees import INF, DegreeSequence, power_ideal
from monomial.hilbert import HilbertFunction
from monomial.ideal import MonomialIdeal, is_subset, normalize

D = DegreeSequence.of


def ideal(n, *gens):
    return normalize(gens, n)


def table(counts, n=2, convention=BettiConvention.IDEAL):
    return BettiTable.from_counts(n, convention, counts)


def test_dominance_verdicts():
    small = table({(0, 2): 2, (1, 4): 1})
    large = table({(0, 2): 2, (0, 3): 1, (1, 3): 1, (1, 4): 1})
    assert dominates(small, small).verdict is Verdict.EQUAL
    report = dominates(small, large)
    assert report.verdict is Verdict.DOMINATED
    assert report.holds
    reverse = dominates(large, small)
    assert reverse.verdict is Verdict.INCOMPARABLE
    assert not reverse.holds
    assert [(w.i, w.j, w.left, w.right) for w in reverse.witnesses] == [(0, 3, 1, 0), (1, 3, 1, 0)]
    assert reverse.to_json()["verdict"] == "incomparable"


def test_dominance_needs_matching_conventions():
    with pytest.raises(ConventionMismatchError):
        dominates(table({(0, 2): 1}), table({(0, 2): 1}, convention=BettiConvention.QUOTIENT))
    with pytest.raises(ConventionMismatchError):
        dominates(table({(0, 2): 1}), table({(0, 2): 1}, n=3))


def test_bhp_bound():
    hf = HilbertFunction.parse("1,2,1,0", 2, "zero")
    assert bhp_bound(hf, 3).as_dict() == {(0, 2): 2, (0, 3): 1, (1, 3): 1, (1, 4): 1}


def test_lpp_bound_of_power_ideal_is_koszul():
    hf = HilbertFunction.parse("1,2,1,0", 2, "zero")
    assert lpp_bound(hf, D(2, 2), 3) == koszul_betti(power_ideal(D(2, 2)))


def test_lpp_bound_is_below_bhp_bound():
    hf = HilbertFunction.parse("1,2,1,0", 2, "zero")
    assert dominates(lpp_bound(hf, D(2, 2), 3), bhp_bound(hf, 3)).verdict is Verdict.DOMINATED


def test_minimal_power_sequence():
    powers = minimal_power_sequence(
        ideal(3, (3, 0, 0), (2, 1, 0), (2, 0, 1), (0, 3, 0), (2, 0, 2), (0, 0, 4))
    )
    assert powers.d == D(3, 3, 4)
    assert powers.in_order
    swapped = minimal_power_sequence(ideal(2, (4, 0), (0, 2)))
    assert swapped.d == D(2, 4)
    assert swapped.permutation == (1, 0)
    assert not swapped.in_order


def test_minimal_power_sequence_of_non_artinian_ideal():
    with pytest.raises(NotArtinianError) as info:
        minimal_power_sequence(ideal(2, (2, 0), (1, 1)))
    assert info.value.variable == 1


def test_betti_table_picks_a_method():
    spp = ideal(2, (2, 0), (1, 1), (0, 3))
    assert betti_table(spp, D(2, 3)) == koszul_betti(spp)
    not_spp = ideal(2, (2, 0), (0, 2))
    assert betti_table(not_spp, D(2, 3)) == koszul_betti(not_spp)
    assert betti_table(not_spp, D(2, INF)) == koszul_betti(not_spp)


def test_verify_main_theorem():
    report = verify_main_theorem(ideal(2, (2, 0), (0, 2)), D(2, 3))
    assert report.verdict is Verdict.DOMINATED
    assert report.degree_hypothesis is True
    assert report.right.as_dict() == {(0, 2): 2, (0, 3): 1, (1, 3): 1, (1, 4): 1}


def test_verify_main_theorem_on_lpp_ideal_is_equal():
    report = verify_main_theorem(ideal(2, (2, 0), (1, 1), (0, 3)), D(2, 3))
    assert report.verdict is Verdict.EQUAL


def test_verify_main_theorem_preconditions():
    with pytest.raises(ContainmentViolationError):
        verify_main_theorem(ideal(2, (3, 0), (0, 2)), D(2, 2))
    with pytest.raises(MalformedInputError):
        verify_main_theorem(ideal(2, (2, 0)), D(2, INF))
    with pytest.raises(MalformedInputError):
        verify_main_theorem(ideal(2, (2, 0), (0, 2)), D(2, 2, 2))


def test_generator_degrees():
    assert generator_degrees(ideal(2, (2, 0), (1, 1), (0, 3))) == {2: 2, 3: 1}


def test_enumerate_artinian_ideals():
    assert list(enumerate_artinian_ideals(D(1, 1))) == [
        ideal(2, (1, 0), (0, 1)),
        MonomialIdeal.unit(2),
    ]
    found = list(enumerate_artinian_ideals(D(2, 2)))
    assert len(found) == 6
    assert len(set(found)) == 6
    assert all(is_subset(power_ideal(D(2, 2)), i) for i in found)


def test_enumerate_ideals_with_fixed_hilbert_function():
    hf = HilbertFunction.parse("1,2,1,0", 2, "zero")
    assert list(enumerate_ideals(D(2, 2), hf, 3)) == [power_ideal(D(2, 2))]
    found = set(enumerate_ideals(D(2, 3), hf, 3))
    assert found == {ideal(2, (2, 0), (1, 1), (0, 3)), ideal(2, (2, 0), (0, 2))}


def test_enumeration_cap():
    with pytest.raises(ResourceLimitError):
        list(enumerate_artinian_ideals(D(2, 2), cap=2))
    with pytest.raises(MalformedInputError):
        list(enumerate_artinian_ideals(D(2, INF)))


def test_enumerate_stable_ideals():
    assert set(enumerate_stable_ideals(1, 2)) == {
        MonomialIdeal.unit(1),
        ideal(1, (1,)),
        ideal(1, (2,)),
    }
    two = set(enumerate_stable_ideals(2, 1))
    assert two == {MonomialIdeal.unit(2), ideal(2, (1, 0)), ideal(2, (1, 0), (0, 1))}
    assert all(is_stable(i) for i in enumerate_stable_ideals(3, 2))


def test_egh_extremality():
    hf = HilbertFunction.parse("1,2,1,0", 2, "zero")
    report = egh_extremality(D(2, 3), hf, 3)
    assert report.passed
    assert report.checked == 2
    assert report.lpp == ideal(2, (2, 0), (1, 1), (0, 3))


def test_random_monomial():
    rng = np.random.default_rng(3)
    for _ in range(20):
        m = random_monomial(3, 4, rng)
        assert len(m) == 3
        assert 1 <= sum(m) <= 4
    with pytest.raises(MalformedInputError):
        random_monomial(3, 0, rng)


def test_random_ideals_are_seeded_and_well_formed():
    d = D(2, 3, 3)
    first = [random_artinian_ideal(d, np.random.default_rng(7)) for _ in range(2)]
    assert first[0] == first[1]
    rng = np.random.default_rng(11)
    for _ in range(10):
        assert is_subset(power_ideal(d), random_artinian_ideal(d, rng))
        assert is_spp(random_spp_ideal(d, rng), d)
        assert is_stable(random_stable_ideal(3, rng))
    with pytest.raises(MalformedInputError):
        random_artinian_ideal(D(2, INF), rng)


def test_proper_random_ideals_sit_strictly_between_powers_and_ring():
    rng = np.random.default_rng(13)
    for d in (D(2, 2), D(2, 3), D(1, 2), D(2, 2, 2)):
        powers = power_ideal(d)
        for _ in range(20):
            i = random_proper_artinian_ideal(d, rng)
            assert is_subset(powers, i)
            assert i != powers
            assert not i.is_unit
    with pytest.raises(MalformedInputError):
        random_proper_artinian_ideal(D(1, 1), rng)
