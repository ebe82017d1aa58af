"""Type B permutation tableaux, signed permutation statistics and the
polynomials B_n(y, t, q) that count them, computed several independent ways."""

from .exactalg import ONE, ZERO, MultiPoly, Series, q, t, y
from .genfun import b_nk, b_poly, b_poly_perms, b_star, eulerian_a_poly, eulerian_b_poly
from .signedperm import SignedPermutation, enumerate_bn, enumerate_sn, stats
from .tableaux import PermTableau, PermTableauB, enumerate_pt, enumerate_ptb, parse_tableau, zigzag

__version__ = "0.1.0"

__all__ = [
    "MultiPoly", "Series", "ONE", "ZERO", "y", "t", "q",
    "SignedPermutation", "enumerate_bn", "enumerate_sn", "stats",
    "PermTableau", "PermTableauB", "enumerate_pt", "enumerate_ptb", "parse_tableau", "zigzag",
    "b_poly", "b_poly_perms", "b_nk", "b_star", "eulerian_b_poly", "eulerian_a_poly",
]
