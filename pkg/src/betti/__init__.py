"""Graded Betti tables: Eliahou-Kervaire, upper Koszul homology and the SPP decomposition."""
