"""Exact-arithmetic tools for a quaternion-flavored braid representation.

The package implements a 2^(2n-2)-dimensional sign algebra on anticommuting
generators, the braid generators living inside it, the finite group they
generate, the associated closed-braid link invariant, and the supporting
Young-diagram / branched-cover combinatorics used to cross-check everything.
"""

from quatbraid.scalar import Scalar, ZETA, ONE, ZERO
from quatbraid.algebra import Word, AlgebraElement
from quatbraid.braids import BraidWord

__all__ = [
    "Scalar",
    "ZETA",
    "ONE",
    "ZERO",
    "Word",
    "AlgebraElement",
    "BraidWord",
]
