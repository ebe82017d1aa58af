"""Weighted Motzkin paths and the two path encodings of signed permutations.

Full paths (from height 0 to height 0) carry steps of eight types:

    type 1  up     q^i                 0 <= i <= h
    type 2  up     yt q^(h+1+i)        0 <= i <= h
    type 3  level  y^2 q^i             0 <= i <= h
    type 4  level  yt q^(h+i)          0 <= i <= h
    type 5  level  q^i                 0 <= i <= h-1
    type 6  level  yt q^(h+i)          0 <= i <= h-1
    type 7  down   y^2 q^i             0 <= i <= h
    type 8  down   yt q^(h+i)          0 <= i <= h

where h is the height of the lower end of the step (the height itself for
level steps).  Suffixes start at any height s, end at 0, carry an extra
factor (yt)^s and use four types:

    type 1  up     y^2 q^i             0 <= i <= h
    type 3  level  y^2 q^i             0 <= i <= h
    type 5  level  q^i                 0 <= i <= h-1
    type 7  down   q^i                 0 <= i <= h
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import InvalidPath, ParseError, StructureViolation
from .exactalg import ONE, MultiPoly
from .signedperm import SignedPermutation, check_limit, mot, mott

DIRECTION = {1: 1, 2: 1, 3: 0, 4: 0, 5: 0, 6: 0, 7: -1, 8: -1}
SUFFIX_TYPES = (1, 3, 5, 7)
_LETTER = {1: "U", 0: "L", -1: "D"}


class Step(NamedTuple):
    type: int
    index: int

    @property
    def direction(self) -> int:
        return DIRECTION[self.type]

    def token(self) -> str:
        return f"{_LETTER[self.direction]}{self.type}:{self.index}"


def _index_bound(typ: int, h: int) -> int:
    return h - 1 if typ in (5, 6) else h


def _full_weight(typ: int, h: int, i: int) -> MultiPoly:
    if typ in (1, 5):
        return MultiPoly.monomial(0, 0, i)
    if typ in (3, 7):
        return MultiPoly.monomial(2, 0, i)
    if typ == 2:
        return MultiPoly.monomial(1, 1, h + 1 + i)
    return MultiPoly.monomial(1, 1, h + i)         # types 4, 6, 8


def _suffix_weight(typ: int, h: int, i: int) -> MultiPoly:
    if typ in (1, 3):
        return MultiPoly.monomial(2, 0, i)
    return MultiPoly.monomial(0, 0, i)


def _parse_steps(tokens) -> tuple:
    steps = []
    for pos, tok in enumerate(tokens, 1):
        try:
            head, idx = tok.split(":")
            typ = int(head[1:])
            if head[0] != _LETTER[DIRECTION[typ]]:
                raise ValueError
            steps.append(Step(typ, int(idx)))
        except (ValueError, KeyError, IndexError):
            raise ParseError(f"step {pos}: bad token {tok!r}") from None
    return tuple(steps)


@dataclass(frozen=True)
class LabeledMotzkinPath:
    steps: tuple

    @property
    def n(self) -> int:
        return len(self.steps)

    def heights(self) -> list:
        hs = [0]
        for s in self.steps:
            hs.append(hs[-1] + s.direction)
        return hs

    def validate(self) -> "LabeledMotzkinPath":
        h = 0
        for pos, s in enumerate(self.steps, 1):
            if s.type not in DIRECTION:
                raise InvalidPath(f"step {pos}: unknown type {s.type}")
            low = h + min(s.direction, 0)
            if low < 0:
                raise InvalidPath(f"step {pos} goes below the axis")
            if not 0 <= s.index <= _index_bound(s.type, low):
                raise InvalidPath(f"step {pos}: index {s.index} out of range at height {low}")
            h += s.direction
        if h != 0:
            raise InvalidPath(f"path ends at height {h}")
        return self

    def step_weights(self) -> list:
        self.validate()
        hs = self.heights()
        return [_full_weight(s.type, min(hs[k], hs[k + 1]), s.index)
                for k, s in enumerate(self.steps)]

    def weight(self) -> MultiPoly:
        w = ONE
        for x in self.step_weights():
            w = w * x
        return w

    def to_text(self) -> str:
        return " ".join(s.token() for s in self.steps)

    def __str__(self):
        return self.to_text()

    @classmethod
    def parse(cls, text: str) -> "LabeledMotzkinPath":
        return cls(_parse_steps(text.split()))


@dataclass(frozen=True)
class MotzkinSuffix:
    start_height: int
    steps: tuple

    @property
    def n(self) -> int:
        return len(self.steps)

    def heights(self) -> list:
        hs = [self.start_height]
        for s in self.steps:
            hs.append(hs[-1] + s.direction)
        return hs

    def validate(self) -> "MotzkinSuffix":
        h = self.start_height
        if h < 0:
            raise InvalidPath("negative start height")
        for pos, s in enumerate(self.steps, 1):
            if s.type not in SUFFIX_TYPES:
                raise InvalidPath(f"step {pos}: type {s.type} is not a suffix type")
            low = h + min(s.direction, 0)
            if low < 0:
                raise InvalidPath(f"step {pos} goes below the axis")
            if not 0 <= s.index <= _index_bound(s.type, low):
                raise InvalidPath(f"step {pos}: index {s.index} out of range at height {low}")
            h += s.direction
        if h != 0:
            raise InvalidPath(f"suffix ends at height {h}")
        return self

    def step_weights(self) -> list:
        self.validate()
        hs = self.heights()
        return [_suffix_weight(s.type, min(hs[k], hs[k + 1]), s.index)
                for k, s in enumerate(self.steps)]

    def weight(self) -> MultiPoly:
        """Product of the step weights times (yt)^start_height."""
        w = MultiPoly.monomial(self.start_height, self.start_height, 0)
        for x in self.step_weights():
            w = w * x
        return w

    def to_text(self) -> str:
        return " ".join([f"@{self.start_height}"] + [s.token() for s in self.steps])

    def __str__(self):
        return self.to_text()

    @classmethod
    def parse(cls, text: str) -> "MotzkinSuffix":
        tokens = text.split()
        if not tokens or not tokens[0].startswith("@"):
            raise ParseError("a suffix starts with @height")
        try:
            sh = int(tokens[0][1:])
        except ValueError:
            raise ParseError(f"bad start height {tokens[0]!r}") from None
        return cls(sh, _parse_steps(tokens[1:]))


def parse_path(text: str):
    text = text.strip()
    if text.startswith("@"):
        return MotzkinSuffix.parse(text)
    return LabeledMotzkinPath.parse(text)


# ------------------------------------------------------------ enumeration

def _choices_full(h: int) -> Iterator[tuple]:
    for typ in range(1, 9):
        d = DIRECTION[typ]
        low = h + min(d, 0)
        if low < 0:
            continue
        for i in range(_index_bound(typ, low) + 1):
            yield typ, i, d


def enumerate_mn(n: int, limit: int | None = None) -> Iterator[LabeledMotzkinPath]:
    check_limit(n, limit)

    def rec(h, prefix):
        left = n - len(prefix)
        if left == 0:
            if h == 0:
                yield LabeledMotzkinPath(tuple(prefix))
            return
        for typ, i, d in _choices_full(h):
            if 0 <= h + d <= left - 1 or (left == 1 and h + d == 0):
                prefix.append(Step(typ, i))
                yield from rec(h + d, prefix)
                prefix.pop()

    yield from rec(0, [])


def enumerate_nn(n: int, limit: int | None = None) -> Iterator[MotzkinSuffix]:
    check_limit(n, limit)

    def rec(h, prefix, start):
        left = n - len(prefix)
        if left == 0:
            if h == 0:
                yield MotzkinSuffix(start, tuple(prefix))
            return
        for typ in SUFFIX_TYPES:
            d = DIRECTION[typ]
            low = h + min(d, 0)
            if low < 0 or h + d > left - 1:
                continue
            for i in range(_index_bound(typ, low) + 1):
                prefix.append(Step(typ, i))
                yield from rec(h + d, prefix, start)
                prefix.pop()

    for start in range(n + 1):
        yield from rec(start, [], start)


def path_sum(n: int, kind: str = "M", limit: int | None = None) -> MultiPoly:
    """Total weight of all full paths ("M") or suffixes ("N") of length n."""
    from collections import Counter

    gen = enumerate_mn if kind == "M" else enumerate_nn
    counts: Counter = Counter()
    for p in gen(n, limit):
        for e, c in p.weight().terms.items():
            counts[e] += c
    return MultiPoly(counts)


# ------------------------------------------------------------ encodings

def fv1(pi) -> LabeledMotzkinPath:
    """Francon-Viennot style encoding of a signed permutation as a full path.

    Step j looks at the position i with |pi_i| = j and compares |pi_i| with
    its neighbours (|pi_0| = 0, |pi_{n+1}| = n + 1): valleys go up, peaks go
    down, double ascents and double descents stay level.  Negative entries
    use the yt-weighted type.  The index is mot(|pi|, i).
    """
    pi = SignedPermutation(pi)
    n = len(pi)
    ab = [0] + [abs(v) for v in pi] + [n + 1]
    where = {ab[i]: i for i in range(1, n + 1)}
    steps = []
    h = 0
    for j in range(1, n + 1):
        i = where[j]
        prev, nxt = ab[i - 1], ab[i + 1]
        neg = pi[i - 1] < 0
        if prev > j < nxt:
            typ = 2 if neg else 1
        elif prev < j < nxt:
            typ = 4 if neg else 3
        elif prev > j > nxt:
            typ = 6 if neg else 5
        else:
            typ = 8 if neg else 7
        idx = mot(ab[1:n + 1], i)
        low = h + min(DIRECTION[typ], 0)
        expected = mot(ab[1:n + 1], i) + mott(ab[1:n + 1], i) + (1 if typ in (5, 6) else 0)
        if low != expected:
            raise StructureViolation(f"height {low} at step {j} of {pi} differs from {expected}")
        steps.append(Step(typ, idx))
        h += DIRECTION[typ]
    return LabeledMotzkinPath(tuple(steps)).validate()


def fz1(pi) -> MotzkinSuffix:
    """Foata-Zeilberger style encoding of a signed permutation as a suffix.

    Work on the arrow diagram of pi on -n < ... < -1 < 1 < ... < n.  Node
    i > 0 gives an up step when its outgoing and incoming arrows both go
    to the right, a down step when both come from the left, a level step
    otherwise.  It gets y^2 when pi(i) >= i, and q for each crossing
    a < i <= pi(a) < pi(i) or a > i > pi(a) > pi(i) with a in [+-n].
    The path starts at height neg(pi).
    """
    pi = SignedPermutation(pi)
    n = len(pi)
    labels = list(range(-n, 0)) + list(range(1, n + 1))
    inv = {pi(a): a for a in labels}
    start = sum(1 for v in pi if v < 0)
    steps = []
    h = start
    for i in range(1, n + 1):
        out, inn = pi(i), inv[i]
        if out > i and inn > i:
            d = 1
        elif out < i and inn < i:
            d = -1
        else:
            d = 0
        b = pi(i)
        c = 0
        for a in labels:
            pa = pi(a)
            if (a < i <= pa < b) or (a > i > pa > b):
                c += 1
        heavy = b >= i
        if d == 1:
            typ = 1
        elif d == -1:
            typ = 7
        else:
            typ = 3 if heavy else 5
        if heavy != (typ in (1, 3)):
            raise StructureViolation(f"node {i} of {pi}: y^2 weight on a {_LETTER[d]} step")
        steps.append(Step(typ, c))
        h += d
    return MotzkinSuffix(start, tuple(steps)).validate()
