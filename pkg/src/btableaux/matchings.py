"""Ordered matchings and the sign-flipping bijection on signed permutations.

An ordered matching is a set of ordered pairs (a, b) covering its ground
set exactly once.  The pair is drawn as an arc above the line when a < b
and below it otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import BadGround, ParseError, PrecondFirstNegative, StructureViolation
from .signedperm import SignedPermutation, matching_pair_counts, negatives


@dataclass(frozen=True)
class OrderedMatching:
    pairs: frozenset

    def __init__(self, pairs: Iterable[tuple]):
        pairs = frozenset((int(a), int(b)) for a, b in pairs)
        seen = [v for p in pairs for v in p]
        if len(seen) != len(set(seen)):
            raise BadGround("a vertex appears in two pairs")
        object.__setattr__(self, "pairs", pairs)

    @property
    def ground(self) -> tuple:
        return tuple(sorted(v for p in self.pairs for v in p))

    def size(self) -> int:
        return len(self.pairs)

    def sorted_pairs(self) -> list:
        return sorted(self.pairs, key=lambda p: min(p))

    def is_standard(self) -> bool:
        return self.ground == tuple(range(1, 2 * len(self.pairs) + 1))

    def to_text(self) -> str:
        return ";".join(f"({a},{b})" for a, b in self.sorted_pairs())

    def __str__(self):
        return self.to_text()

    @classmethod
    def parse(cls, text: str) -> "OrderedMatching":
        text = text.strip()
        if not text:
            return cls(())
        pairs = []
        for pos, chunk in enumerate(text.split(";"), 1):
            body = chunk.strip().strip("()")
            try:
                a, b = (int(x) for x in body.split(","))
            except ValueError:
                raise ParseError(f"pair {pos}: bad pair {chunk.strip()!r}") from None
            pairs.append((a, b))
        return cls(pairs)


def _require_standard(m: OrderedMatching):
    if not m.is_standard():
        raise BadGround(f"ground set {m.ground} is not [2n]")


def standardize(m: OrderedMatching) -> OrderedMatching:
    """Relabel the ground set order-preservingly onto [2n]."""
    rank = {v: i for i, v in enumerate(m.ground, 1)}
    return OrderedMatching((rank[a], rank[b]) for a, b in m.pairs)


def rho(m: OrderedMatching) -> OrderedMatching:
    """Move vertex 1 to the far right and standardise."""
    _require_standard(m)
    top = 2 * m.size() + 1
    moved = OrderedMatching((top if a == 1 else a, top if b == 1 else b) for a, b in m.pairs)
    return standardize(moved)


def rho_power(m: OrderedMatching, k: int) -> OrderedMatching:
    for _ in range(k):
        m = rho(m)
    return m


def reverse(m: OrderedMatching) -> OrderedMatching:
    """Mirror image: i goes to 2n + 1 - i."""
    _require_standard(m)
    top = 2 * m.size() + 1
    return OrderedMatching((top - a, top - b) for a, b in m.pairs)


def crossings(m: OrderedMatching) -> int:
    """Pairs of arcs on the same side of the line that interleave."""
    return matching_pair_counts(m.pairs)[0]


def alignments(m: OrderedMatching) -> int:
    return matching_pair_counts(m.pairs)[1]


def half_arc(m: OrderedMatching, v: int) -> str:
    """Direction of the half arc at vertex v: 'ur', 'ul', 'dr' or 'dl'.

    u/d says whether the arc is drawn above or below the line; r/l says
    whether the arc leaves v towards the right or the left.
    """
    for a, b in m.pairs:
        if v in (a, b):
            other = b if v == a else a
            side = "u" if a < b else "d"
            return side + ("r" if other > v else "l")
    raise BadGround(f"vertex {v} is not matched")


def is_pignose(m: OrderedMatching) -> bool:
    """Whether m is the pignose matching of an unsigned permutation.

    Odd vertices must carry an up-right or down-left half arc, even
    vertices an up-left or down-right one.
    """
    if not m.is_standard():
        return False
    for v in m.ground:
        h = half_arc(m, v)
        if v % 2 and h not in ("ur", "dl"):
            return False
        if not v % 2 and h not in ("ul", "dr"):
            return False
    return True


def pignose_matching(sigma) -> OrderedMatching:
    if any(v < 0 for v in sigma):
        raise ValueError("pignose_matching needs an unsigned permutation")
    return OrderedMatching((2 * i - 1, 2 * v) for i, v in enumerate(sigma, 1))


def matching_to_permutation(m: OrderedMatching) -> SignedPermutation:
    """Inverse of ``pignose_matching``: 2i-1 is joined to 2 sigma(i)."""
    images = {}
    for a, b in m.pairs:
        src, dst = (a, b) if a % 2 else (b, a)
        if src % 2 == 0 or dst % 2:
            raise StructureViolation(f"pair ({a},{b}) does not join an odd to an even vertex")
        images[(src + 1) // 2] = dst // 2
    return SignedPermutation(images[i] for i in range(1, len(images) + 1))


# ------------------------------------------------------------- the map phi

@dataclass(frozen=True)
class SplitDiagram:
    """Pignose diagram of pi with each spiral cut in two.

    The m spirals get m extra pignoses to the left of pignose 1, the
    spiral of the smallest position taking the extra pignose nearest to 1.
    """

    matching: OrderedMatching
    extra: int          # m, the number of extra pignoses
    n: int


def split_spirals(pi) -> SplitDiagram:
    pi = SignedPermutation(pi)
    n = len(pi)
    m = negatives(pi)
    pairs = []
    r = 0
    for i, v in enumerate(pi, 1):
        src = 2 * m + 2 * i - 1
        if v > 0:
            pairs.append((src, 2 * m + 2 * v))
            continue
        r += 1
        left, right = 2 * (m - r) + 1, 2 * (m - r) + 2
        pairs.append((src, right))                   # lower half of the spiral
        pairs.append((left, 2 * m + 2 * (-v)))       # upper half
    return SplitDiagram(OrderedMatching(pairs), m, n)


def _check_properties(N: OrderedMatching, m: int, n: int, fwex_before: int) -> None:
    """The structural facts the contraction step relies on."""
    for v in range(1, 2 * m + 1):
        a, b = next(p for p in N.pairs if v in p)
        other = b if a == v else a
        if other <= 2 * m:
            raise StructureViolation(f"vertex {v} is matched inside the first {2 * m}")
    low = [p for p in N.pairs if p[0] > p[1] and min(p) <= 2 * m]
    if matching_pair_counts(low)[0]:
        raise StructureViolation("the lower arcs at the extra vertices cross")
    if half_arc(N, 2 * m + 1)[0] != "u":
        raise StructureViolation(f"vertex {2 * m + 1} does not carry an upper arc")
    ups = sum(1 for v in range(2 * m + 1, 2 * m + 2 * n + 1) if half_arc(N, v)[0] == "u")
    if ups != 2 * n + 2 - fwex_before:
        raise StructureViolation(f"{ups} upper half arcs on the last {2 * n} vertices, "
                                 f"expected {2 * n + 2 - fwex_before}")


def contract(N: OrderedMatching, m: int, n: int) -> SignedPermutation:
    """Glue vertices 2i-1 and 2i (i <= m) back into spirals."""
    images = {}
    glued = set(range(1, 2 * m + 1))

    def pignose(v):
        return (v - 2 * m + 1) // 2

    for i in range(1, m + 1):
        a, b = 2 * i - 1, 2 * i
        up = next((p for p in N.pairs if p[0] == a), None)
        down = next((p for p in N.pairs if p[1] == b), None)
        if up is None or up[1] < up[0] or down is None or down[0] < down[1]:
            raise StructureViolation(f"extra pignose {i} is not an upper/lower pair")
        src, dst = down[0], up[1]
        if (src - 2 * m) % 2 == 0 or (dst - 2 * m) % 2:
            raise StructureViolation("spiral does not start and end on pignose vertices")
        images[pignose(src)] = -pignose(dst)
    for a, b in N.pairs:
        if a in glued or b in glued:
            continue
        if (a - 2 * m) % 2 == 0 or (b - 2 * m) % 2:
            raise StructureViolation(f"arc ({a},{b}) is not first-to-second vertex")
        images[pignose(a)] = pignose(b)
    if sorted(images) != list(range(1, n + 1)):
        raise StructureViolation("contraction did not give a signed permutation")
    return SignedPermutation(images[i] for i in range(1, n + 1))


def phi(pi) -> SignedPermutation:
    """Bijection from {pi_1 > 0} to {pi_1 < 0} in B_n.

    It keeps the number of crossings, adds one negative entry and sends
    fwex to 2n + 1 - fwex.
    """
    from .signedperm import fwex

    pi = SignedPermutation(pi)
    if not pi or pi[0] < 0:
        raise PrecondFirstNegative("phi needs a nonempty permutation with pi_1 > 0")
    split = split_spirals(pi)
    m, n = split.extra, split.n
    N = reverse(rho_power(split.matching, 2 * m + 1))
    _check_properties(N, m, n, fwex(pi))
    sigma = contract(N, m, n)
    return SignedPermutation((-sigma[0],) + tuple(sigma[1:]))
