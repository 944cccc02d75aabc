"""Lex order, Macaulay bounds and lex ideals."""
