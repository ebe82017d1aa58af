"""Plain ASCII drawings of tableaux, arc diagrams and paths.

Every drawing starts with the object's machine text form on one line, so
the first line of any rendering can be fed straight back to the parser.
"""
from __future__ import annotations

from .matchings import OrderedMatching, split_spirals
from .paths import LabeledMotzkinPath, MotzkinSuffix, parse_path
from .signedperm import SignedPermutation, full_pignose_arcs, full_pignose_vertices
from .tableaux import PermTableau, parse_tableau

KINDS = ("tableau", "pignose", "full-pignose", "matching", "path")


def _levels(spans: list) -> list:
    """Stack arcs so that overlapping spans never share a row.

    Shorter arcs are placed first, closest to the baseline.
    """
    order = sorted(range(len(spans)), key=lambda k: (spans[k][1] - spans[k][0], spans[k][0]))
    level = [0] * len(spans)
    placed = []
    for k in order:
        lo, hi = spans[k]
        clash = [level[j] for j in placed if not (spans[j][1] < lo or hi < spans[j][0])]
        level[k] = 1 + max(clash, default=0)
        placed.append(k)
    return level


def _put(grid, r, c, ch):
    old = grid[r][c]
    if (old == "|" and ch == "-") or (old == "-" and ch == "|"):
        ch = "+"
    grid[r][c] = ch


def _half(spans: list, width: int, upper: bool) -> list:
    if not spans:
        return []
    level = _levels(spans)
    height = max(level)
    grid = [[" "] * width for _ in range(height)]
    corner = "." if upper else "'"
    for (lo, hi), lev in zip(spans, level):
        row = height - lev if upper else lev - 1
        for c in range(lo + 1, hi):
            _put(grid, row, c, "-")
        grid[row][lo] = grid[row][hi] = corner
        rest = range(row + 1, height) if upper else range(0, row)
        for r in rest:
            _put(grid, r, lo, "|")
            _put(grid, r, hi, "|")
    return ["".join(r).rstrip() for r in grid]


def arc_diagram(xs: dict, pairs, baseline: str, footer: list) -> list:
    """Draw ordered pairs (a, b) between vertices placed at columns xs[v].

    a < b goes above the baseline, a > b below it.
    """
    width = max(len(baseline), max(xs.values(), default=0) + 1)
    up = [(xs[a], xs[b]) for a, b in pairs if a < b]
    down = [(xs[b], xs[a]) for a, b in pairs if a > b]
    return _half(up, width, True) + [baseline.rstrip()] + _half(down, width, False) + footer


def _pignose_row(labels: list, marks: list) -> tuple:
    """Baseline and label line for pignoses drawn as o_o, five columns apart."""
    base = [" "] * (5 * len(labels))
    lab = [" "] * (5 * len(labels) + 4)
    for p, (label, mark) in enumerate(zip(labels, marks)):
        x = 5 * p
        base[x], base[x + 1], base[x + 2] = mark, "_", mark
        text = str(label)
        start = x + 1 - (len(text) - 1) // 2
        for k, ch in enumerate(text):
            lab[start + k] = ch
    return "".join(base), "".join(lab).rstrip()


def render_pignose(pi) -> str:
    """Pignose diagram with each spiral cut through phantom pignoses on the left."""
    pi = SignedPermutation(pi)
    split = split_spirals(pi)
    m, n = split.extra, split.n
    labels = ["" for _ in range(m)] + list(range(1, n + 1))
    marks = ["*"] * m + ["o"] * n
    xs = {}
    for p in range(m + n):
        xs[2 * p + 1], xs[2 * p + 2] = 5 * p, 5 * p + 2
    base, lab = _pignose_row(labels, marks)
    head = [str(pi), f"pignoses: {n}, spiral arcs: {m}"]
    return "\n".join(head + arc_diagram(xs, split.matching.pairs, base, [lab]))


def render_full_pignose(pi) -> str:
    """The 2n pignoses -n..-1, 1..n; a negative label has its vertices swapped."""
    pi = SignedPermutation(pi)
    n = len(pi)
    labels = list(range(-n, 0)) + list(range(1, n + 1))
    xs = {}
    for p in range(2 * n):
        xs[2 * p + 1], xs[2 * p + 2] = 5 * p, 5 * p + 2
    base, lab = _pignose_row(labels, ["o"] * (2 * n))
    pairs = [(a.source, a.target) for a in full_pignose_arcs(pi)]
    head = [str(pi), f"full pignose diagram on {2 * n} pignoses"]
    return "\n".join(head + arc_diagram(xs, pairs, base, [lab]))


def render_matching(m: OrderedMatching) -> str:
    ground = m.ground
    xs = {v: 3 * k for k, v in enumerate(ground)}
    base = [" "] * (3 * len(ground))
    lab = [" "] * (3 * len(ground) + 3)
    for v, x in xs.items():
        base[x] = "o"
        for k, ch in enumerate(str(v)):
            lab[x + k] = ch
    return "\n".join([m.to_text()] + arc_diagram(xs, m.pairs, "".join(base), ["".join(lab).rstrip()]))


def render_path(p) -> str:
    hs = p.heights()
    top = max(hs)
    grid = [[" "] * len(p.steps) for _ in range(top + 1)]
    for k, s in enumerate(p.steps):
        low = min(hs[k], hs[k + 1])
        grid[top - low][k] = {1: "/", 0: "_", -1: "\\"}[s.direction]
    rows = ["".join(r).rstrip() for r in grid]
    lines = [p.to_text()] + rows
    lines.append("heights: " + "-".join(str(h) for h in hs))
    lines.append("weight: " + p.weight().to_text())
    return "\n".join(lines)


def render_tableau(tab: PermTableau) -> str:
    """Cells on a grid, diagonal cells in brackets; row labels on the right,
    column labels underneath."""
    cols = tab.shape.columns
    labels = tab.shape.row_labels()
    lines = tab.to_text().split("\n")[:1]
    for r, row in enumerate(tab.rows, 1):
        cells = []
        for c, v in enumerate(row, 1):
            cells.append(f"[{v}]" if (r, c) in tab.diagonal_cells() else f" {v} ")
        line = "".join(cells).ljust(3 * cols)
        if r > tab.added:
            line += f" | {labels[r - tab.added - 1]}"
        lines.append(line.rstrip())
    lines.append("".join(f"{c:^3}" for c in tab.shape.column_labels()).rstrip())
    return "\n".join(lines)


def parse_input(kind: str, text: str):
    """Parse the machine text form for one of the render kinds."""
    if kind == "tableau":
        return parse_tableau(text.replace("/", "\n"))
    if kind in ("pignose", "full-pignose"):
        return SignedPermutation.parse(text)
    if kind == "matching":
        return OrderedMatching.parse(text)
    if kind == "path":
        return parse_path(text)
    raise ValueError(f"unknown render kind {kind!r}")


def to_text(obj) -> str:
    return obj.to_text() if hasattr(obj, "to_text") else str(obj)


def render(kind: str, obj) -> str:
    if kind == "tableau":
        return render_tableau(obj)
    if kind == "pignose":
        return render_pignose(obj)
    if kind == "full-pignose":
        return render_full_pignose(obj)
    if kind == "matching":
        return render_matching(obj)
    if kind == "path":
        return render_path(obj)
    raise ValueError(f"unknown render kind {kind!r}")
