"""Permutation tableaux of type A and type B, and the zigzag maps.

A diagram is described by its border word, read from the north-east corner
to the south-west corner: ``v`` is a vertical step (one row) and ``h`` a
horizontal step (one column).  Steps are labelled 1..n in that order.

Rows are stored top to bottom as tuples of 0/1.  A type B tableau also
stores its k added rows (of lengths 1..k) above the rows of the Ferrers
diagram; the rightmost cell of each added row is its diagonal cell.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import InvalidTableau, ParseError
from .exactalg import MultiPoly
from .signedperm import SignedPermutation, check_limit


@dataclass(frozen=True)
class BorderShape:
    word: str

    def __post_init__(self):
        if set(self.word) - {"h", "v"}:
            raise ValueError(f"border word {self.word!r} must use only h and v")

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def columns(self) -> int:
        return self.word.count("h")

    @property
    def row_lengths(self) -> list:
        """Lengths of the Ferrers rows, top to bottom."""
        out = []
        for i, s in enumerate(self.word):
            if s == "v":
                out.append(self.word[i + 1:].count("h"))
        return out

    def row_labels(self) -> list:
        return [i for i, s in enumerate(self.word, 1) if s == "v"]

    def column_labels(self) -> list:
        """Step label of each column, left to right."""
        return [i for i, s in enumerate(self.word, 1) if s == "h"][::-1]


def all_shapes(n: int) -> Iterator[BorderShape]:
    for bits in range(2 ** n):
        yield BorderShape("".join("h" if bits >> (n - 1 - i) & 1 else "v" for i in range(n)))


class Violation(NamedTuple):
    condition: int
    cell: tuple     # (row, column), 1-based over the stored rows


@dataclass(frozen=True)
class PermTableau:
    """Type A permutation tableau: a 0/1 filling of a Ferrers diagram."""

    word: str
    rows: tuple

    shifted = False

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))
        expected = self.expected_lengths()
        if [len(r) for r in self.rows] != expected:
            raise InvalidTableau(f"row lengths {[len(r) for r in self.rows]} do not fit {self.word!r}")

    @property
    def shape(self) -> BorderShape:
        return BorderShape(self.word)

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def added(self) -> int:
        return 0

    def expected_lengths(self) -> list:
        return BorderShape(self.word).row_lengths

    def diagonal_cells(self) -> list:
        return []

    def validate(self) -> Violation | None:
        return _validate(self)

    def check(self):
        v = self.validate()
        if v is not None:
            raise InvalidTableau(f"condition ({v.condition}) fails at cell {v.cell}")
        return self

    def weight_exponents(self) -> tuple:
        return tableau_exponents(self)

    def to_text(self) -> str:
        return tableau_to_text(self)

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class PermTableauB(PermTableau):
    """Type B permutation tableau on the shifted diagram."""

    shifted = True

    @property
    def added(self) -> int:
        return self.word.count("h")

    def expected_lengths(self) -> list:
        k = self.word.count("h")
        return list(range(1, k + 1)) + BorderShape(self.word).row_lengths

    def diagonal_cells(self) -> list:
        return [(r, r) for r in range(1, self.added + 1)]

    @property
    def diag(self) -> int:
        return sum(self.rows[r - 1][r - 1] for r in range(1, self.added + 1))


def _column(tab: PermTableau, c: int) -> list:
    """Values of column c (1-based), top to bottom, with their row indices."""
    return [(r, row[c - 1]) for r, row in enumerate(tab.rows, 1) if len(row) >= c]


def _validate(tab: PermTableau) -> Violation | None:
    k = tab.word.count("h")
    for c in range(1, k + 1):
        col = _column(tab, c)
        if not any(v for _, v in col):
            cell = col[0][0] if col else 0
            return Violation(1, (cell, c))
    for r, row in enumerate(tab.rows, 1):
        for c, v in enumerate(row, 1):
            if v:
                continue
            one_left = any(row[:c - 1])
            one_above = any(tab.rows[rr - 1][c - 1] for rr in range(1, r)
                            if len(tab.rows[rr - 1]) >= c)
            if one_left and one_above:
                return Violation(2, (r, c))
            if tab.shifted and r <= tab.added and c == r and one_left:
                return Violation(3, (r, c))
    return None


def tableau_exponents(tab: PermTableau) -> tuple:
    """(2 row + diag, diag, so) for a type B tableau, (2 row, 0, so) for type A.

    ``row`` counts the rows of the Ferrers part (empty rows included) and
    ``so`` counts the 1s that have a 1 somewhere above them in their column.
    """
    rows = tab.word.count("v")
    diag = tab.diag if tab.shifted else 0
    so = 0
    for c in range(1, tab.word.count("h") + 1):
        seen = False
        for _, v in _column(tab, c):
            if v:
                if seen:
                    so += 1
                seen = True
    return (2 * rows + diag, diag, so)


# ------------------------------------------------------------ text form

def tableau_to_text(tab: PermTableau) -> str:
    lines = [tab.word]
    for r, row in enumerate(tab.rows, 1):
        cells = "".join(str(v) for v in row)
        if tab.shifted and r <= tab.added:
            cells += "*"
        lines.append(cells)
    return "\n".join(lines)


def parse_tableau(text: str, kind: str | None = None) -> PermTableau:
    """Inverse of ``tableau_to_text``.  Missing trailing empty rows are allowed."""
    lines = [ln.strip() for ln in text.strip("\n").split("\n")]
    if not lines or not lines[0]:
        raise ParseError("a tableau needs a border word on its first line")
    word = lines[0]
    body = lines[1:]
    if kind is None:
        kind = "B" if any(ln.endswith("*") for ln in body) else "A"
    cls = PermTableauB if kind.upper() == "B" else PermTableau
    k = word.count("h")
    expected = (k if cls is PermTableauB else 0) + word.count("v")
    if len(body) > expected:
        if any(body[expected:]):
            raise ParseError("too many rows for the border word")
        body = body[:expected]
    body = body + [""] * (expected - len(body))
    rows = []
    for r, ln in enumerate(body, 1):
        star = ln.endswith("*")
        ln = ln.rstrip("*")
        if cls is PermTableauB and (star != (r <= k)):
            raise ParseError(f"row {r}: diagonal marker misplaced")
        if set(ln) - {"0", "1"}:
            raise ParseError(f"row {r}: cells must be 0 or 1")
        rows.append(tuple(int(ch) for ch in ln))
    try:
        return cls(word, tuple(rows))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# ------------------------------------------------------------ enumeration

def _fillings(lengths: list, added: int) -> Iterator[tuple]:
    """Depth-first fill of rows top to bottom, pruning conditions (2) and (3)."""
    ncols = max(lengths, default=0)
    # last row index of each column, to force condition (1) early
    last_row = [0] * (ncols + 1)
    for r, ln in enumerate(lengths, 1):
        for c in range(1, ln + 1):
            last_row[c] = r
    has_one = [False] * (ncols + 1)
    rows: list = []

    def fill_row(r):
        if r > len(lengths):
            yield tuple(rows)
            return
        ln = lengths[r - 1]
        cur: list = []

        def fill_cell(c, left_one):
            if c > ln:
                rows.append(tuple(cur))
                yield from fill_row(r + 1)
                rows.pop()
                return
            diag = r <= added and c == r
            for v in (0, 1):
                if v == 0:
                    if left_one and has_one[c]:
                        continue
                    if diag and left_one:
                        continue
                    if last_row[c] == r and not has_one[c]:
                        continue
                    cur.append(0)
                    yield from fill_cell(c + 1, left_one)
                    cur.pop()
                else:
                    prev = has_one[c]
                    has_one[c] = True
                    cur.append(1)
                    yield from fill_cell(c + 1, True)
                    cur.pop()
                    has_one[c] = prev

        yield from fill_cell(1, False)

    yield from fill_row(1)


def enumerate_pt(n: int, limit: int | None = None) -> Iterator[PermTableau]:
    """Type A permutation tableaux of length n (there are n! of them)."""
    check_limit(n, limit)
    for shape in all_shapes(n):
        lengths = shape.row_lengths
        k = shape.columns
        # every column needs a cell, so column k must be reached by some row
        if k and (not lengths or lengths[0] < k):
            continue
        for rows in _fillings(lengths, 0):
            yield PermTableau(shape.word, rows)


def enumerate_ptb(n: int, limit: int | None = None) -> Iterator[PermTableauB]:
    """Type B permutation tableaux of length n (there are 2^n n! of them)."""
    check_limit(n, limit)
    for shape in all_shapes(n):
        k = shape.columns
        lengths = list(range(1, k + 1)) + shape.row_lengths
        for rows in _fillings(lengths, k):
            yield PermTableauB(shape.word, rows)


def b_poly_tableaux(n: int, limit: int | None = None) -> MultiPoly:
    """Sum of y^(2 row + diag) t^diag q^so over type B tableaux of length n."""
    counts = Counter(tableau_exponents(T) for T in enumerate_ptb(n, limit))
    return MultiPoly(counts)


def e_poly_type_a(n: int, k: int, limit: int | None = None) -> MultiPoly:
    """Sum of q^so over type A tableaux of length n with k rows."""
    counts: Counter = Counter()
    for T in enumerate_pt(n, limit):
        if T.word.count("v") == k:
            counts[(0, 0, tableau_exponents(T)[2])] += 1
    return MultiPoly(counts)


# ------------------------------------------------------------ zigzag maps

def _walk(tab: PermTableau, r: int, c: int, east: bool) -> int:
    """Leave cell (r, c) heading east or south, turning at every 1 met.

    Returns the label of the border step where the walk exits.
    """
    rows = tab.rows
    row_labels = tab.shape.row_labels()
    col_labels = tab.shape.column_labels()
    while True:
        if east:
            row = rows[r - 1]
            nxt = next((cc for cc in range(c + 1, len(row) + 1) if row[cc - 1]), None)
            if nxt is None:
                if r <= tab.added:
                    raise InvalidTableau(f"zigzag path leaves added row {r} eastwards")
                return row_labels[r - 1 - tab.added]
            c, east = nxt, False
        else:
            nxt = next((rr for rr in range(r + 1, len(rows) + 1)
                        if len(rows[rr - 1]) >= c and rows[rr - 1][c - 1]), None)
            if nxt is None:
                return col_labels[c - 1]
            r, east = nxt, True


def zigzag(tab: PermTableau) -> SignedPermutation:
    """The zigzag map: a tableau of length n to a (signed) permutation of n.

    Type A tableaux give unsigned permutations; type B tableaux use the
    diagonal to produce negative entries.
    """
    shape = tab.shape
    n = shape.n
    images = [0] * n
    row_of = {lab: i for i, lab in enumerate(shape.row_labels(), 1)}
    col_of = {lab: c for c, lab in enumerate(shape.column_labels(), 1)}
    for step in range(1, n + 1):
        if step in row_of:
            r = row_of[step] + tab.added
            row = tab.rows[r - 1]
            left = next((c for c in range(1, len(row) + 1) if row[c - 1]), None)
            images[step - 1] = step if left is None else _walk(tab, r, left, east=False)
            continue
        c = col_of[step]
        if tab.shifted and tab.rows[c - 1][c - 1]:
            row = tab.rows[c - 1]
            left = next(cc for cc in range(1, c + 1) if row[cc - 1])
            images[step - 1] = -_walk(tab, c, left, east=False)
            continue
        top = next((r for r, v in _column(tab, c) if v), None)
        if top is None:
            raise InvalidTableau(f"column {c} has no 1")
        images[step - 1] = _walk(tab, top, c, east=True)
    return SignedPermutation(images)
