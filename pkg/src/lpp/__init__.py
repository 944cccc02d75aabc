"""Degree sequences, x_n-decompositions and lex-plus-powers ideals."""
