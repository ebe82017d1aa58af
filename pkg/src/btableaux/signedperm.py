"""Signed permutations and their statistics.

A signed permutation of size n is stored as the tuple of its images
(pi_1, ..., pi_n).  It extends to [+-n] by pi(-i) = -pi(i).
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import LimitExceeded, ParseError

DEFAULT_LIMIT = 8


def enumeration_limit() -> int:
    return int(os.environ.get("BTABLEAUX_LIMIT", DEFAULT_LIMIT))


def check_limit(n: int, limit: int | None = None) -> None:
    bound = enumeration_limit() if limit is None else limit
    if n > bound:
        raise LimitExceeded(f"n = {n} is above the enumeration limit {bound}")


class SignedPermutation(tuple):
    """Tuple of images with a few conveniences.

    ``pi[i - 1]`` is pi_i; ``pi(i)`` evaluates on [+-n].
    """

    def __new__(cls, images: Sequence[int] = ()):
        images = tuple(int(v) for v in images)
        n = len(images)
        if sorted(abs(v) for v in images) != list(range(1, n + 1)):
            raise ValueError(f"{images} is not a signed permutation")
        return super().__new__(cls, images)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        if i > 0:
            return self[i - 1]
        if i < 0:
            return -self[-i - 1]
        raise ValueError("signed permutations act on nonzero integers")

    def inverse(self) -> "SignedPermutation":
        out = [0] * len(self)
        for i, v in enumerate(self, 1):
            out[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(out)

    def is_unsigned(self) -> bool:
        return all(v > 0 for v in self)

    def __str__(self):
        return ",".join(str(v) for v in self)

    def __repr__(self):
        return f"SignedPermutation(({', '.join(str(v) for v in self)}))"

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        values = []
        for pos, part in enumerate(text.split(","), 1):
            try:
                values.append(int(part))
            except ValueError:
                raise ParseError(f"entry {pos}: {part.strip()!r} is not an integer") from None
        try:
            return cls(values)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def enumerate_bn(n: int, limit: int | None = None) -> Iterator[SignedPermutation]:
    """All 2^n n! signed permutations, lexicographic with -k < k < -(k+1)."""
    check_limit(n, limit)

    def rec(prefix, remaining):
        if not remaining:
            yield SignedPermutation(prefix)
            return
        for a in sorted(remaining):
            rest = remaining - {a}
            for v in (-a, a):
                yield from rec(prefix + (v,), rest)

    yield from rec((), frozenset(range(1, n + 1)))


def enumerate_sn(n: int, limit: int | None = None) -> Iterator[SignedPermutation]:
    check_limit(n, limit)
    for p in itertools.permutations(range(1, n + 1)):
        yield SignedPermutation(p)


# ---------------------------------------------------------------- statistics

@dataclass(frozen=True)
class StatRecord:
    wex: int
    exc: int
    des: int
    des_b: int
    neg: int
    fwex: int
    fexc: int
    fdes: int


def weak_excedances(pi) -> int:
    return sum(1 for i, v in enumerate(pi, 1) if v >= i)


def excedances(pi) -> int:
    return sum(1 for i, v in enumerate(pi, 1) if v > i)


def descents(pi) -> int:
    return sum(1 for a, b in zip(pi, pi[1:]) if a > b)


def descents_b(pi) -> int:
    seq = (0,) + tuple(pi)
    return sum(1 for a, b in zip(seq, seq[1:]) if a > b)


def negatives(pi) -> int:
    return sum(1 for v in pi if v < 0)


def fwex(pi) -> int:
    return 2 * weak_excedances(pi) + negatives(pi)


def fexc(pi) -> int:
    return 2 * excedances(pi) + negatives(pi)


def fdes(pi) -> int:
    return descents(pi) + descents_b(pi)


def stats(pi) -> StatRecord:
    wex, exc, neg = weak_excedances(pi), excedances(pi), negatives(pi)
    des, des_b = descents(pi), descents_b(pi)
    return StatRecord(wex, exc, des, des_b, neg, 2 * wex + neg, 2 * exc + neg, des + des_b)


def crossings(pi) -> int:
    """Number of ordered pairs (i, j) in [n]^2 forming a crossing."""
    n = len(pi)
    count = 0
    for i in range(1, n + 1):
        a = pi[i - 1]
        for j in range(1, n + 1):
            b = pi[j - 1]
            if (i < j <= a < b) or (j <= -a < b) or (i > j > a > b):
                count += 1
    return count


def crossing_pairs(pi) -> list:
    n = len(pi)
    out = []
    for i in range(1, n + 1):
        a = pi[i - 1]
        for j in range(1, n + 1):
            b = pi[j - 1]
            if (i < j <= a < b) or (j <= -a < b) or (i > j > a > b):
                out.append((i, j))
    return out


# arrow diagram of |pi|: arrow i -> |pi_i|, above the axis when i <= |pi_i|

def _arrows(pi):
    return [(i, abs(v), v > 0) for i, v in enumerate(pi, 1)]


def crossings_via_configurations(pi) -> int:
    """Crossings counted on the labelled arrow diagram of |pi|.

    Six local patterns are counted, with U an upper arrow (start <= end)
    and L a lower arrow; a sign of +, - or either is attached to each.

    1. U s->e (either sign) and L i->d (-) with s <= d < e
    2. L i->d (either) and U s->c (-) with d < s < i
    3. U s->e (either) enclosing U a->b (-): s < a <= b < e
    4. L i->d (either) enclosing L j->c (-): d < c < j < i
    5. U i->a (either) and U j->b (+) with i < j <= a < b
    6. L j->c (either) and L i->d (+) with c < d < j < i
    """
    arrows = _arrows(pi)
    upper = [(s, e, pos) for s, e, pos in arrows if s <= e]
    lower = [(s, e, pos) for s, e, pos in arrows if s > e]
    count = 0
    for s, e, _ in upper:
        for i, d, pos in lower:
            if not pos and s <= d < e:
                count += 1
    for i, d, _ in lower:
        for s, c, pos in upper:
            if not pos and d < s < i:
                count += 1
    for s, e, _ in upper:
        for a, b, pos in upper:
            if not pos and s < a <= b < e:
                count += 1
    for i, d, _ in lower:
        for j, c, pos in lower:
            if not pos and d < c < j < i:
                count += 1
    for i, a, _ in upper:
        for j, b, pos in upper:
            if pos and i < j <= a < b:
                count += 1
    for j, c, _ in lower:
        for i, d, pos in lower:
            if pos and c < d < j < i:
                count += 1
    return count


# ----------------------------------------------------------- pignose diagrams

@dataclass(frozen=True)
class Arc:
    label: int      # the i whose arc this is
    source: int     # vertex position of the first vertex of pignose i
    target: int     # second vertex of pignose pi(i)

    @property
    def upper(self) -> bool:
        return self.source < self.target

    @property
    def span(self) -> tuple:
        return (min(self.source, self.target), max(self.source, self.target))


def _pair_relation(a: tuple, b: tuple) -> str:
    (l1, r1), (l2, r2) = a, b
    if l1 > l2:
        (l1, r1), (l2, r2) = (l2, r2), (l1, r1)
    if r1 < l2:
        return "disjoint"
    if r2 < r1:
        return "nested"
    return "crossing"


def matching_pair_counts(pairs) -> tuple:
    """(crossings, alignments) of an ordered matching given as (source, target) pairs.

    Two arcs cross when they sit on the same side and interleave.  They form
    an alignment when they are nested on the same side, or disjoint with one
    above and one below the line.
    """
    arcs = [((min(a, b), max(a, b)), a < b) for a, b in pairs]
    cro = al = 0
    for x in range(len(arcs)):
        sx, ux = arcs[x]
        for w in range(x + 1, len(arcs)):
            sw, uw = arcs[w]
            rel = _pair_relation(sx, sw)
            if ux == uw:
                if rel == "crossing":
                    cro += 1
                elif rel == "nested":
                    al += 1
            elif rel == "disjoint":
                al += 1
    return cro, al


def pignose_pairs(sigma) -> list:
    """Ordered matching on [2n] of an unsigned permutation: 2i-1 -> 2 sigma(i)."""
    if any(v < 0 for v in sigma):
        raise ValueError("pignose_pairs needs an unsigned permutation")
    return [(2 * i - 1, 2 * v) for i, v in enumerate(sigma, 1)]


def alignments_type_a(sigma) -> int:
    return matching_pair_counts(pignose_pairs(sigma))[1]


def full_pignose_vertices(n: int, label: int) -> tuple:
    """(first, second) vertex positions of the pignose labelled ``label`` in [+-n]."""
    p = n + label + 1 if label < 0 else n + label
    left, right = 2 * p - 1, 2 * p
    return (right, left) if label < 0 else (left, right)


def full_pignose_arcs(pi) -> list:
    n = len(pi)
    sp = SignedPermutation(pi)
    arcs = []
    for i in list(range(-n, 0)) + list(range(1, n + 1)):
        first = full_pignose_vertices(n, i)[0]
        second = full_pignose_vertices(n, sp(i))[1]
        arcs.append(Arc(i, first, second))
    return arcs


def full_pignose_counts(pi) -> tuple:
    """(intersecting pairs, alignments) in the full pignose diagram."""
    return matching_pair_counts([(a.source, a.target) for a in full_pignose_arcs(pi)])


def alignments(pi) -> int:
    return full_pignose_counts(pi)[1]


def line_counts(pi, k: int) -> tuple:
    """Upper and lower arcs of the full pignose diagram crossing the vertical
    line through the middle of the pignose labelled k."""
    n = len(pi)
    first, second = full_pignose_vertices(n, k)
    x = (first + second) / 2
    up = low = 0
    for arc in full_pignose_arcs(pi):
        lo, hi = arc.span
        if lo < x < hi:
            if arc.upper:
                up += 1
            else:
                low += 1
    return up, low


def line_counts_type_a(sigma, k: int) -> tuple:
    x = 2 * k - 0.5
    up = low = 0
    for a, b in pignose_pairs(sigma):
        if min(a, b) < x < max(a, b):
            if a < b:
                up += 1
            else:
                low += 1
    return up, low


# ----------------------------------------------------- pattern statistics

def mot(sigma, i: int) -> int:
    """#{j : 1 <= j < i-1, sigma_j > sigma_i > sigma_{j+1}} (1-based i)."""
    v = sigma[i - 1]
    return sum(1 for j in range(1, i - 1) if sigma[j - 1] > v > sigma[j])


def mott(sigma, i: int) -> int:
    """#{j : i < j < n, sigma_j > sigma_i > sigma_{j+1}}."""
    n = len(sigma)
    v = sigma[i - 1]
    return sum(1 for j in range(i + 1, n) if sigma[j - 1] > v > sigma[j])


def unsigned_mot(sigma) -> int:
    return sum(mot(sigma, i) for i in range(1, len(sigma) + 1))


@dataclass(frozen=True)
class PatternStats:
    hasc: int
    pat: int
    fneg: int
    mot_plus: int


def hasc(pi) -> int:
    seq = (0,) + tuple(pi)
    return 2 * sum(1 for a, b in zip(seq, seq[1:]) if abs(a) < b) + negatives(pi)


def pat(pi) -> int:
    n = len(pi)
    ab = [abs(v) for v in pi] + [n + 1]
    first = 0
    for i in range(1, n):
        hi, lo = ab[i - 1], ab[i]
        if hi > lo:
            first += sum(1 for j in range(i + 2, n + 1) if hi > ab[j - 1] > lo)
    second = 0
    for i in range(1, n + 1):
        hi, lo = ab[i - 1], ab[i]
        for v in pi:
            if v < 0 and hi > -v >= lo:
                second += 1
    return first + second


def full_sequence(pi) -> list:
    """pi(-n), ..., pi(-1), pi(1), ..., pi(n)."""
    return [-v for v in reversed(pi)] + list(pi)


def fneg(pi) -> int:
    seq = full_sequence(pi)
    return sum(1 for a, b in zip(seq, seq[1:]) if a > 0 and b < 0)


def standardized_full(pi) -> list:
    """The permutation of [2n] obtained from pi on [+-n] by relabelling
    -n..-1, 1..n as 1..2n."""
    n = len(pi)
    return [v + n + 1 if v < 0 else v + n for v in full_sequence(pi)]


def mot_plus(pi) -> int:
    n = len(pi)
    st = standardized_full(pi)
    return sum(mot(st, i) for i in range(1, 2 * n + 1) if st[i - 1] > n)


def pattern_stats(pi) -> PatternStats:
    return PatternStats(hasc(pi), pat(pi), fneg(pi), mot_plus(pi))


# ------------------------------------------------------------- transforms

def negate(pi) -> SignedPermutation:
    return SignedPermutation(-v for v in pi)


def transpose(pi) -> SignedPermutation:
    """Transpose of the signed permutation matrix: the signed inverse."""
    return SignedPermutation(pi).inverse()


def negate_first(pi) -> SignedPermutation:
    if not pi:
        raise ValueError("empty permutation has no first entry")
    return SignedPermutation((-pi[0],) + tuple(pi[1:]))


# ------------------------------------------------- vectorised statistic table

def all_signed_array(n: int, signs: bool = True) -> np.ndarray:
    """Every signed permutation of size n as rows of an int array."""
    rows = list(itertools.permutations(range(1, n + 1)))
    perms = np.array(rows, dtype=np.int16).reshape(len(rows), n)
    if not signs:
        return perms
    bits = list(itertools.product((0, 1), repeat=n))
    masks = 1 - 2 * np.array(bits, dtype=np.int16).reshape(len(bits), n)
    return (perms[:, None, :] * masks[None, :, :]).reshape(-1, n)


def _vec_wex(P):
    idx = np.arange(1, P.shape[1] + 1)
    return (P >= idx).sum(axis=1)


def _vec_exc(P):
    idx = np.arange(1, P.shape[1] + 1)
    return (P > idx).sum(axis=1)


def _vec_neg(P):
    return (P < 0).sum(axis=1)


def _vec_des(P):
    return (P[:, :-1] > P[:, 1:]).sum(axis=1) if P.shape[1] > 1 else np.zeros(len(P), dtype=int)


def _vec_des_b(P):
    Z = np.concatenate([np.zeros((len(P), 1), dtype=P.dtype), P], axis=1)
    return (Z[:, :-1] > Z[:, 1:]).sum(axis=1)


def _vec_cro(P):
    n = P.shape[1]
    total = np.zeros(len(P), dtype=np.int64)
    for i in range(1, n + 1):
        a = P[:, i - 1]
        for j in range(1, n + 1):
            b = P[:, j - 1]
            hit = (j <= -a) & (-a < b)
            if i < j:
                hit |= (j <= a) & (a < b)
            elif i > j:
                hit |= (j > a) & (a > b)
            total += hit
    return total


def _vec_first_positive(P):
    if P.shape[1] == 0:
        return np.zeros(len(P), dtype=int)
    return (P[:, 0] > 0).astype(int)


VECTOR_STATS = {
    "wex": _vec_wex,
    "exc": _vec_exc,
    "neg": _vec_neg,
    "des": _vec_des,
    "des_b": _vec_des_b,
    "fwex": lambda P: 2 * _vec_wex(P) + _vec_neg(P),
    "fexc": lambda P: 2 * _vec_exc(P) + _vec_neg(P),
    "fdes": lambda P: _vec_des(P) + _vec_des_b(P),
    "cro": _vec_cro,
    "first_positive": _vec_first_positive,
}


def statistic_counts(n: int, names: Sequence[str], signed: bool = True,
                     limit: int | None = None) -> Counter:
    """Joint distribution of the named statistics over B_n (or S_n).

    Returns a Counter keyed by tuples of statistic values.  Signed
    permutations are processed one sign pattern at a time to keep memory flat.
    """
    check_limit(n, limit)
    perms = all_signed_array(n, signs=False)
    masks = list(itertools.product((1, -1), repeat=n)) if signed else [(1,) * n]
    out: Counter = Counter()
    for mask in masks:
        P = perms * np.array(mask, dtype=np.int16)
        cols = [np.asarray(VECTOR_STATS[name](P), dtype=np.int64) for name in names]
        if not cols:
            out[()] += len(P)
            continue
        keys, counts = np.unique(np.stack(cols, axis=1), axis=0, return_counts=True)
        for key, c in zip(keys, counts):
            out[tuple(int(v) for v in key)] += int(c)
    return out
