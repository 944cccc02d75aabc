"""Betti numbers of arbitrary monomial ideals from upper Koszul simplicial complexes.

For a multidegree ``b``, ``beta_{i,b}(I)`` is the rank of the reduced homology in dimension
``i - 1`` of ``K^b(I) = {squarefree σ : x^(b - σ) ∈ I}``. Only lcms of sets of minimal
generators can carry nonzero Betti numbers, so ``b`` runs over the lcm lattice.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np
from loguru import logger

from betti.linalg import exact_rank
from betti.table import BettiConvention, BettiTable
from errors import ResourceLimitError
from monomial import monomials as mono
from monomial.ideal import MonomialIdeal, contains
from monomial.monomials import Monomial

DEFAULT_LCM_CAP = 1 << 16

Face = tuple[int, ...]


def lcm_lattice(ideal: MonomialIdeal, cap: int = DEFAULT_LCM_CAP) -> list[Monomial]:
    """All lcms of nonempty sets of minimal generators, in canonical order."""
    lattice: set[Monomial] = set()
    for g in ideal.gens:
        lattice |= {mono.lcm(g, b) for b in lattice} | {g}
        if len(lattice) > cap:
            raise ResourceLimitError(
                f"lcm lattice exceeds the cap of {cap} elements", count=len(lattice)
            )
    return sorted(lattice, key=mono.canonical_key)


def upper_koszul_faces(ideal: MonomialIdeal, b: Monomial) -> dict[int, list[Face]]:
    """Faces of ``K^b`` grouped by size; the empty face is included when ``x^b ∈ I``."""
    support = [i for i, e in enumerate(b) if e > 0]
    faces: dict[int, list[Face]] = {}
    for size in range(len(support) + 1):
        layer = [
            sigma
            for sigma in combinations(support, size)
            if contains(ideal, _lower(b, sigma))
        ]
        if not layer:
            break
        faces[size] = layer
    return faces


def reduced_homology_ranks(faces: dict[int, list[Face]]) -> dict[int, int]:
    """``dim H~_{k}`` keyed by face size ``k + 1``, rational coefficients."""
    ranks = {size: _boundary_rank(faces.get(size, []), faces.get(size - 1, [])) for size in faces}
    homology = {}
    for size, layer in faces.items():
        value = len(layer) - ranks[size] - ranks.get(size + 1, 0)
        if value:
            homology[size] = value
    return homology


def koszul_betti(ideal: MonomialIdeal, cap: int = DEFAULT_LCM_CAP) -> BettiTable:
    counts: dict[tuple[int, int], int] = {}
    lattice = lcm_lattice(ideal, cap)
    for b in lattice:
        for size, value in reduced_homology_ranks(upper_koszul_faces(ideal, b)).items():
            # faces of size i compute beta_i
            key = (size, mono.degree(b))
            counts[key] = counts.get(key, 0) + value
    logger.debug("koszul_betti n={} gens={} lattice={}", ideal.n, len(ideal.gens), len(lattice))
    return BettiTable.from_counts(ideal.n, BettiConvention.IDEAL, counts)


def _lower(b: Monomial, sigma: Face) -> Monomial:
    lowered = list(b)
    for i in sigma:
        lowered[i] -= 1
    return tuple(lowered)


def _boundary_rank(upper: list[Face], lower: list[Face]) -> int:
    if not upper or not lower:
        return 0
    index = {face: r for r, face in enumerate(lower)}
    matrix = np.zeros((len(lower), len(upper)), dtype=object)
    for c, face in enumerate(upper):
        for position in range(len(face)):
            matrix[index[face[:position] + face[position + 1 :]], c] = (-1) ** position
    return exact_rank(matrix)
