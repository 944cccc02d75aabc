"""Seeded random monomial ideals for fuzz campaigns."""
from __future__ import annotations

import numpy as np

from errors import MalformedInputError
from lpp.decomposition import stable_closure, xn_stable_closure
from lpp.degrees import DegreeSequence, power_ideal
from monomial import monomials as mono
from monomial.ideal import MonomialIdeal, contains, normalize
from monomial.monomials import Monomial


def random_monomial(n: int, max_degree: int, rng: np.random.Generator) -> Monomial:
    """Uniform degree in ``1..max_degree``, then a uniform monomial of that degree."""
    if max_degree < 1:
        raise MalformedInputError("max_degree must be at least 1")
    j = int(rng.integers(1, max_degree + 1))
    choices = mono.monomials_of_degree(n, j)
    return choices[int(rng.integers(len(choices)))]


def random_artinian_ideal(
    d: DegreeSequence,
    rng: np.random.Generator,
    max_degree: int | None = None,
    extra_generators: int = 3,
) -> MonomialIdeal:
    """``℘`` plus a few random monomials."""
    if not d.is_finite:
        raise MalformedInputError(f"random Artinian ideals need finite degrees, got {d}")
    if max_degree is None:
        max_degree = d.socle_degree()
    max_degree = max(max_degree, 1)
    count = int(rng.integers(0, extra_generators + 1))
    extra = [random_monomial(d.n, max_degree, rng) for _ in range(count)]
    return normalize(list(power_ideal(d).gens) + extra, d.n)


def random_proper_artinian_ideal(
    d: DegreeSequence,
    rng: np.random.Generator,
    max_degree: int | None = None,
    extra_generators: int = 3,
) -> MonomialIdeal:
    """A random ideal with ``℘ ⊊ I ⊊ S``: at least one added monomial lies outside ``℘``."""
    base = random_artinian_ideal(d, rng, max_degree, extra_generators)
    powers = power_ideal(d)
    top = d.socle_degree() if max_degree is None else min(max(max_degree, 1), d.socle_degree())
    outside = [
        m
        for j in range(1, top + 1)
        for m in mono.monomials_of_degree(d.n, j)
        if not contains(powers, m)
    ]
    if not outside:
        raise MalformedInputError(f"every nonconstant monomial lies in the ideal of powers {d}")
    return normalize([*base.gens, outside[int(rng.integers(len(outside)))]], d.n)


def random_spp_ideal(
    d: DegreeSequence,
    rng: np.random.Generator,
    max_degree: int | None = None,
    extra_generators: int = 3,
) -> MonomialIdeal:
    """The x_n-stable closure of a random ideal containing ``℘``, hence d-SPP."""
    return xn_stable_closure(random_artinian_ideal(d, rng, max_degree, extra_generators))


def random_stable_ideal(
    n: int,
    rng: np.random.Generator,
    max_degree: int = 4,
    generators: int = 3,
) -> MonomialIdeal:
    seeds = [random_monomial(n, max_degree, rng) for _ in range(max(generators, 1))]
    return stable_closure(normalize(seeds, n))
