"""Mod-2 homology of the 3-fold cyclic branched cover, from a Seifert matrix.

For a Seifert matrix V of a link, the first homology of the 3-fold cover
branched over the link is presented by the block matrix

    M = [ V + V^T   V     ]
        [ V^T       V + V^T ]

and the Z2-dimension we need is the nullity of M mod 2.  This is the exponent
appearing in the magnitude of the closed-braid invariant, computed here by an
entirely independent route (integer matrices and F2 elimination, no braid or
algebra arithmetic).
"""

from __future__ import annotations

from quatbraid import gf2


def _check_square(v: list[list[int]]):
    for row in v:
        if len(row) != len(v):
            raise ValueError("Seifert matrix must be square")


def triple_cover_presentation(v: list[list[int]]) -> list[list[int]]:
    """The 2m x 2m block presentation matrix [[V+Vt, V], [Vt, V+Vt]]."""
    _check_square(v)
    m = len(v)
    big = [[0] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        for j in range(m):
            s = v[i][j] + v[j][i]
            big[i][j] = s
            big[i][m + j] = v[i][j]
            big[m + i][j] = v[j][i]
            big[m + i][m + j] = s
    return big


def triple_cover_dim(v: list[list[int]]) -> int:
    """dim of the mod-2 first homology of the 3-fold branched cover."""
    _check_square(v)
    if not v:
        return 0
    big = triple_cover_presentation(v)
    size = len(big)
    rows = [sum(((x & 1) << j) for j, x in enumerate(row)) for row in big]
    return gf2.nullity(rows, size)


def double_cover_determinant(v: list[list[int]]) -> int:
    """det(V + V^T): the order of the double branched cover homology, up to sign."""
    _check_square(v)
    m = len(v)
    if m == 0:
        return 1
    from fractions import Fraction

    work = [[Fraction(v[i][j] + v[j][i]) for j in range(m)] for i in range(m)]
    det = Fraction(1)
    for col in range(m):
        pivot = next((r for r in range(col, m) if work[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        p = work[col][col]
        det *= p
        for r in range(col + 1, m):
            f = work[r][col] / p
            for c in range(col, m):
                work[r][c] -= f * work[col][c]
    assert det.denominator == 1
    return int(det)


def symplectic_check(v: list[list[int]]) -> bool:
    """det(V - V^T) = +/-1; holds for any knot Seifert matrix (advisory for links)."""
    _check_square(v)
    m = len(v)
    if m == 0:
        return True
    from fractions import Fraction

    work = [[Fraction(v[i][j] - v[j][i]) for j in range(m)] for i in range(m)]
    det = Fraction(1)
    for col in range(m):
        pivot = next((r for r in range(col, m) if work[r][col]), None)
        if pivot is None:
            return False
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        p = work[col][col]
        det *= p
        for r in range(col + 1, m):
            f = work[r][col] / p
            for c in range(col, m):
                work[r][c] -= f * work[col][c]
    return abs(det) == 1
