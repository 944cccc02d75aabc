"""Betti bounds, dominance reports and ideal enumeration."""
