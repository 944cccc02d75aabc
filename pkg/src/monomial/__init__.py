"""Monomials, monomial ideals and their Hilbert functions."""
