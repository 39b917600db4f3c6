"""Exact arithmetic over F2: binomials, sparse polynomials, bit matrices."""

from quadco.gf2.binomial import binom_mod2
from quadco.gf2.matrix import (
    F2Matrix,
    intersect_rowspaces,
    left_kernel,
    nullspace,
    rank,
    rank_and_reduce,
    rowspace_contains,
    same_rowspace,
)
from quadco.gf2.poly import PolyF2, mono, poly_mul, poly_substitute

__all__ = [
    "F2Matrix",
    "PolyF2",
    "binom_mod2",
    "intersect_rowspaces",
    "left_kernel",
    "mono",
    "nullspace",
    "poly_mul",
    "poly_substitute",
    "rank",
    "rank_and_reduce",
    "rowspace_contains",
    "same_rowspace",
]
