"""F2 linear algebra on int bitsets (bit i of a row = column i)."""

from __future__ import annotations


def rank(rows: list[int], n_cols: int) -> int:
    """Rank over F2 by Gaussian elimination."""
    work = [r for r in rows if r]
    rk = 0
    for col in range(n_cols):
        pivot = None
        for i in range(rk, len(work)):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        for i in range(len(work)):
            if i != rk and ((work[i] >> col) & 1):
                work[i] ^= work[rk]
        rk += 1
        if rk == len(work):
            break
    return rk


def nullity(rows: list[int], n_cols: int) -> int:
    return n_cols - rank(rows, n_cols)


def nullspace(rows: list[int], n_cols: int) -> list[int]:
    """Basis of the right nullspace {x : Ax = 0}, one bitset per basis vector."""
    work = [r for r in rows if r]
    pivots: list[int] = []  # pivot column per echelon row
    rk = 0
    for col in range(n_cols):
        pivot = None
        for i in range(rk, len(work)):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        for i in range(len(work)):
            if i != rk and ((work[i] >> col) & 1):
                work[i] ^= work[rk]
        pivots.append(col)
        rk += 1
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        vec = 1 << f
        for row, pcol in zip(work[:rk], pivots):
            if (row >> f) & 1:
                vec |= 1 << pcol
        basis.append(vec)
    return basis
