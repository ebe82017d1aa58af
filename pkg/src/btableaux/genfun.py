"""Generating polynomials B_n(y, t, q) and their specialisations.

Everything here is computed by brute force over signed permutations; the
tableau side lives in ``tableaux`` and the algebraic routes in ``ansatz``.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .exactalg import MultiPoly, binomial
from .signedperm import check_limit, statistic_counts


@lru_cache(maxsize=None)
def _joint(n: int, names: tuple, signed: bool = True) -> Counter:
    return statistic_counts(n, names, signed=signed, limit=max(n, 0))


def b_poly_perms(n: int, limit: int | None = None) -> MultiPoly:
    """Sum over B_n of y^fwex t^neg q^cro."""
    check_limit(n, limit)
    counts = _joint(n, ("fwex", "neg", "cro"))
    return MultiPoly({key: c for key, c in counts.items()})


def b_poly(n: int, limit: int | None = None) -> MultiPoly:
    return b_poly_perms(n, limit)


def b_nk(n: int, k: int, limit: int | None = None) -> MultiPoly:
    """Coefficient of y^k in B_n, a polynomial in t and q."""
    return b_poly_perms(n, limit).coeff("y", k)


def b_star(n: int, k: int, limit: int | None = None) -> MultiPoly:
    """Sum over fwex = k of t^(neg + [pi_1 > 0]) q^cro."""
    check_limit(n, limit)
    counts = _joint(n, ("fwex", "neg", "first_positive", "cro"))
    out: Counter = Counter()
    for (fw, neg, first, cro), c in counts.items():
        if fw == k:
            out[(0, neg + first, cro)] += c
    return MultiPoly(out)


def b_plus_minus(n: int, k: int, limit: int | None = None) -> tuple:
    """(B+_{n,k}, B-_{n,k}) split by the sign of pi_1."""
    check_limit(n, limit)
    counts = _joint(n, ("fwex", "neg", "first_positive", "cro"))
    plus: Counter = Counter()
    minus: Counter = Counter()
    for (fw, neg, first, cro), c in counts.items():
        if fw == k:
            (plus if first else minus)[(0, neg, cro)] += c
    return MultiPoly(plus), MultiPoly(minus)


def eulerian_b_poly(n: int, k: int, limit: int | None = None) -> MultiPoly:
    """Type B q-Eulerian number: sum of q^cro over floor(fwex / 2) = k."""
    check_limit(n, limit)
    counts = _joint(n, ("fwex", "cro"))
    out: Counter = Counter()
    for (fw, cro), c in counts.items():
        if fw // 2 == k:
            out[(0, 0, cro)] += c
    return MultiPoly(out)


def eulerian_b_from_bnk(n: int, k: int, limit: int | None = None) -> MultiPoly:
    """Same number read off B_{n,2k}(1, q) + B_{n,2k+1}(1, q)."""
    b = b_poly_perms(n, limit)
    return (b.coeff("y", 2 * k) + b.coeff("y", 2 * k + 1)).subs(t=1)


def eulerian_b_count(n: int, k: int, limit: int | None = None) -> int:
    return eulerian_b_poly(n, k, limit).total()


def eulerian_a_poly(n: int, k: int, limit: int | None = None) -> MultiPoly:
    """q-Eulerian number of type A: sum of q^cro over S_n with k weak excedances."""
    check_limit(n, limit)
    counts = _joint(n, ("wex", "cro"), signed=False)
    out: Counter = Counter()
    for (wex, cro), c in counts.items():
        if wex == k:
            out[(0, 0, cro)] += c
    return MultiPoly(out)


def noncrossing_count(n: int, k: int, limit: int | None = None) -> int:
    """#{pi in B_n : cro = 0 and floor(fwex / 2) = k}."""
    check_limit(n, limit)
    counts = _joint(n, ("fwex", "cro"))
    return sum(c for (fw, cro), c in counts.items() if cro == 0 and fw // 2 == k)


def distribution(n: int, name: str, limit: int | None = None) -> Counter:
    """Histogram of a single statistic over B_n."""
    check_limit(n, limit)
    return Counter({key[0]: c for key, c in _joint(n, (name,)).items()})


def gen_table(n: int, variant: str, limit: int | None = None) -> list:
    """Rows (n, k, polynomial) for one of bnk, bstar, eulerian-b, eulerian-a."""
    if variant == "bnk":
        ks = [0] if n == 0 else range(1, 2 * n + 1)
        return [(n, k, b_nk(n, k, limit)) for k in ks]
    if variant == "bstar":
        ks = [0] if n == 0 else range(1, 2 * n + 1)
        return [(n, k, b_star(n, k, limit)) for k in ks]
    if variant == "eulerian-b":
        return [(n, k, eulerian_b_poly(n, k, limit)) for k in range(n + 1)]
    if variant == "eulerian-a":
        ks = [0] if n == 0 else range(1, n + 1)
        return [(n, k, eulerian_a_poly(n, k, limit)) for k in ks]
    raise ValueError(f"unknown table {variant!r}")


# closed forms used as references for the specialisations

def q_minus_one_closed_form(n: int) -> MultiPoly:
    """B_n(y, 1, -1) = sum_{k=1}^{2n} C(n-1, ceil(k/2) - 1) y^k."""
    if n == 0:
        return MultiPoly.const(1)
    return MultiPoly({(k, 0, 0): binomial(n - 1, (k + 1) // 2 - 1) for k in range(1, 2 * n + 1)})


def narayana_b_closed_form(n: int) -> MultiPoly:
    """B_n(y, 1, 0) = sum_{i=1}^{2n} C(n, floor(i/2)) C(n-1, ceil(i/2) - 1) y^i."""
    if n == 0:
        return MultiPoly.const(1)
    return MultiPoly({(i, 0, 0): binomial(n, i // 2) * binomial(n - 1, (i + 1) // 2 - 1)
                      for i in range(1, 2 * n + 1)})
