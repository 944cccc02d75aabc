"""Exact integer linear algebra for boundary matrices."""
from __future__ import annotations

from math import gcd

import numpy as np


def exact_rank(matrix: np.ndarray) -> int:
    """Rank over the rationals by fraction-free row elimination.

    Entries are Python ints in an ``object`` array, so nothing overflows or rounds. Each
    pivot row is reduced by its content to keep entries small.
    """
    m = np.array(matrix, dtype=object, copy=True)
    if m.ndim != 2 or 0 in m.shape:
        return 0
    rows, columns = m.shape
    row = 0
    for column in range(columns):
        if row >= rows:
            break
        pivots = [i for i in range(row, rows) if m[i, column] != 0]
        if not pivots:
            continue
        p = pivots[0]
        if p != row:
            m[[p, row]] = m[[row, p]]
        m[row] = _primitive(m[row])
        lead = m[row, column]
        for i in range(row + 1, rows):
            current = m[i, column]
            if current != 0:
                g = gcd(lead, current)
                m[i] = m[i] * (lead // g) - m[row] * (current // g)
        row += 1
    return row


def _primitive(vector: np.ndarray) -> np.ndarray:
    content = 0
    for value in vector:
        content = gcd(content, int(value))
    if content > 1:
        return vector // content
    return vector
