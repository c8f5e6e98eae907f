"""Exact rank kernels: GF(p) elimination and fraction-free integer elimination.

Matrices are lists of rows (lists of ints).  Nothing here is approximate;
ranks over the rationals are computed on the integer matrix itself with
Bareiss pivoting, so no floating point is involved anywhere.
"""

from __future__ import annotations


def rank_gf2(bitrows) -> int:
    """Rank over GF(2) of rows packed as integers (bit j = column j)."""
    pivots: list[tuple[int, int]] = []
    rank = 0
    for row in bitrows:
        for pb, pr in pivots:
            if (row >> pb) & 1:
                row ^= pr
        if row:
            pivots.append((row.bit_length() - 1, row))
            rank += 1
    return rank


def rank_mod_p(matrix, p: int) -> int:
    """Rank over GF(p) by straightforward Gaussian elimination."""
    rows = [[x % p for x in r] for r in matrix]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        prow = rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                mult = f * inv % p
                ri = rows[i]
                for j in range(c, ncols):
                    ri[j] = (ri[j] - mult * prow[j]) % p
        rank += 1
    return rank


def rank_integer(matrix) -> int:
    """Rank over the rationals via one-step Bareiss elimination.

    Works on integer entries only; every division below is exact by the
    Sylvester determinant identity, so the arithmetic never leaves the
    integers.
    """
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        for i in range(rank + 1, len(rows)):
            ri = rows[i]
            lead = ri[c]
            for j in range(c + 1, ncols):
                ri[j] = (ri[j] * prow[c] - lead * prow[j]) // prev
            ri[c] = 0
        prev = prow[c]
        rank += 1
    return rank


def rank(matrix, characteristic: int) -> int:
    """Dispatch on field characteristic: 0 means rationals, else GF(p)."""
    if characteristic == 0:
        return rank_integer(matrix)
    if characteristic == 2:
        bitrows = []
        for r in matrix:
            m = 0
            for j, x in enumerate(r):
                if x % 2:
                    m |= 1 << j
            bitrows.append(m)
        return rank_gf2(bitrows)
    return rank_mod_p(matrix, characteristic)
