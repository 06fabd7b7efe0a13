"""Exact rank of integer matrices by fraction-free (Bareiss) elimination."""

from __future__ import annotations


def bareiss_rank(rows) -> int:
    """Rank over the rationals of an integer matrix given as a list of rows.

    Every intermediate entry is a minor of the input, so the division by the
    previous pivot is always exact.
    """
    m = [[int(v) for v in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    if any(len(row) != ncols for row in m):
        raise ValueError("ragged matrix")
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        top = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - a * top[j]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r
