"""Exact polynomials in Z[y, t, q] and truncated power series over them.

Coefficients are Python integers, so nothing here ever rounds.
"""
from __future__ import annotations

import json
import math
import re
from typing import Callable, Iterable, Mapping, Sequence

from .errors import BadLowestTerms, NotDivisible, ParseError

VARS = ("y", "t", "q")
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}

Exponent = tuple  # (ey, et, eq)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _display_key(exp):
    # y descending, then t descending, then q ascending
    return (-exp[0], -exp[1], exp[2])


class MultiPoly:
    """Sparse polynomial in y, t, q with integer coefficients.

    Instances are treated as immutable.  Integers mix freely in arithmetic.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    exp = tuple(int(e) for e in exp)
                    if len(exp) != 3 or min(exp) < 0:
                        raise ValueError(f"bad exponent {exp!r}")
                    clean[exp] = int(c)
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, ey: int = 0, et: int = 0, eq: int = 0, c: int = 1) -> "MultiPoly":
        return cls({(ey, et, eq): c})

    @classmethod
    def coerce(cls, value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        raise TypeError(f"cannot treat {type(value).__name__} as a polynomial")

    @classmethod
    def from_counts(cls, counts: Mapping[Exponent, int]) -> "MultiPoly":
        return cls(counts)

    # inspection
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _display_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self, var: str) -> int:
        """Largest exponent of ``var``; -1 for the zero polynomial."""
        i = _VAR_INDEX[var]
        return max((e[i] for e in self._terms), default=-1)

    def constant_term(self) -> int:
        return self._terms.get((0, 0, 0), 0)

    def as_int(self) -> int:
        if any(e != (0, 0, 0) for e in self._terms):
            raise ValueError(f"{self} is not a constant")
        return self.constant_term()

    def total(self) -> int:
        """Sum of all coefficients (the value at y = t = q = 1)."""
        return sum(self._terms.values())

    # arithmetic
    def __add__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for (a1, b1, c1), k1 in self._terms.items():
            for (a2, b2, c2), k2 in other._terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, 0) + k1 * k2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # coefficient access and substitution
    def coeff(self, var: str, k: int) -> "MultiPoly":
        """Coefficient of ``var**k`` as a polynomial in the other variables."""
        i = _VAR_INDEX[var]
        out = {}
        for e, c in self._terms.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return MultiPoly(out)

    def subs(self, **values) -> "MultiPoly":
        """Substitute integers or polynomials for any of y, t, q."""
        for name in values:
            if name not in _VAR_INDEX:
                raise KeyError(name)
        repl = [values.get(v) for v in VARS]
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = MultiPoly.coerce(repl[i]) ** k
            return cache[key]

        out = MultiPoly()
        plain: dict = {}
        for e, c in self._terms.items():
            kept = tuple(0 if repl[i] is not None else e[i] for i in range(3))
            factor = 1
            for i in range(3):
                if repl[i] is not None and e[i]:
                    if isinstance(repl[i], int):
                        factor *= repl[i] ** e[i]
                    else:
                        factor = power(i, e[i]) * factor
            if isinstance(factor, int):
                plain[kept] = plain.get(kept, 0) + c * factor
            else:
                out = out + factor * MultiPoly({kept: c})
        return out + MultiPoly(plain)

    def map_exponents(self, fn: Callable[[Exponent], Exponent]) -> "MultiPoly":
        out: dict = {}
        for e, c in self._terms.items():
            e2 = fn(e)
            out[e2] = out.get(e2, 0) + c
        return MultiPoly(out)

    def q_derivative_t(self) -> "MultiPoly":
        """The q-derivative in t: t^n goes to [n]_q t^(n-1)."""
        out = MultiPoly()
        for (a, b, c), k in self._terms.items():
            if b:
                out = out + q_integer(b) * MultiPoly({(a, b - 1, c): k})
        return out

    # text and json forms
    def to_text(self, compact: bool = False) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.items():
            factors = []
            for name, k in zip(VARS, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append((c < 0, body))
        sep_plus, sep_minus = ("+", "-") if compact else (" + ", " - ")
        neg, body = pieces[0]
        out = ("-" if neg else "") + body
        for neg, body in pieces[1:]:
            out += (sep_minus if neg else sep_plus) + body
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        chunks = re.findall(r"([+-])([^+-]+)", s)
        if "".join(sign + body for sign, body in chunks) != s:
            raise ParseError(f"cannot parse polynomial {text!r}")
        out: dict = {}
        for sign, body in chunks:
            coef = 1
            exp = [0, 0, 0]
            for factor in body.split("*"):
                m = re.fullmatch(r"(\d+)|([ytq])(?:\^(\d+))?", factor)
                if not m:
                    raise ParseError(f"bad factor {factor!r} in {text!r}")
                if m.group(1) is not None:
                    coef *= int(m.group(1))
                else:
                    exp[_VAR_INDEX[m.group(2)]] += int(m.group(3) or 1)
            if sign == "-":
                coef = -coef
            e = tuple(exp)
            out[e] = out.get(e, 0) + coef
        return cls(out)

    def to_json_terms(self) -> list:
        return [{"y": e[0], "t": e[1], "q": e[2], "c": str(c)} for e, c in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_terms())

    @classmethod
    def from_json_terms(cls, data: Iterable[Mapping]) -> "MultiPoly":
        out: dict = {}
        for term in data:
            e = (int(term["y"]), int(term["t"]), int(term["q"]))
            out[e] = out.get(e, 0) + int(term["c"])
        return cls(out)

    @classmethod
    def from_json(cls, text: str) -> "MultiPoly":
        return cls.from_json_terms(json.loads(text))


y = MultiPoly.monomial(1, 0, 0)
t = MultiPoly.monomial(0, 1, 0)
q = MultiPoly.monomial(0, 0, 1)
ONE = MultiPoly.const(1)
ZERO = MultiPoly()


def q_integer(n: int) -> MultiPoly:
    """[n]_q = 1 + q + ... + q^(n-1); zero for n = 0."""
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    return MultiPoly({(0, 0, i): 1 for i in range(n)})


def q_derivative_t(p: MultiPoly) -> MultiPoly:
    return p.q_derivative_t()


def coeff_extract(p: MultiPoly, var: str, k: int) -> MultiPoly:
    return p.coeff(var, k)


def eval_subst(p: MultiPoly, **values) -> MultiPoly:
    return p.subs(**values)


def _lex_key(e):
    return e  # lexicographic with y > t > q


def divide_exact(p, d) -> MultiPoly:
    """Exact quotient p / d in Z[y, t, q]; raises NotDivisible otherwise."""
    p = MultiPoly.coerce(p)
    d = MultiPoly.coerce(d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead_e = max(d._terms, key=_lex_key)
    lead_c = d._terms[lead_e]
    rem = dict(p._terms)
    quot: dict = {}
    while rem:
        e = max(rem, key=_lex_key)
        c = rem[e]
        shift = tuple(a - b for a, b in zip(e, lead_e))
        if min(shift) < 0 or c % lead_c:
            raise NotDivisible(f"{p} is not divisible by {d}")
        k = c // lead_c
        quot[shift] = k
        for de, dc in d._terms.items():
            te = tuple(a + b for a, b in zip(de, shift))
            v = rem.get(te, 0) - k * dc
            if v:
                rem[te] = v
            else:
                rem.pop(te, None)
    return MultiPoly(quot)


class Series:
    """Power series in z with MultiPoly coefficients, truncated at z^order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = [MultiPoly.coerce(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least one coefficient")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def z(cls, order: int) -> "Series":
        return cls([0, 1], order)

    @classmethod
    def constant(cls, c, order: int) -> "Series":
        return cls([c], order)

    def __getitem__(self, k: int) -> MultiPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, min(order, self.order))

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        return Series([other], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return Series([self[i] + other[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, MultiPoly)):
            return Series([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = ZERO
            for i in range(k + 1):
                a, b = self[i], other[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return Series(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Series([1], self.order)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> "Series":
        """Multiply by z^k, keeping the order."""
        return Series([ZERO] * k + list(self.coeffs), self.order)

    def inverse(self) -> "Series":
        c0 = self[0]
        if c0 not in (ONE, -ONE):
            raise BadLowestTerms(f"constant term {c0} is not a unit")
        inv0 = c0.as_int()
        out = [MultiPoly.const(inv0)]
        for k in range(1, self.order + 1):
            acc = ZERO
            for i in range(1, k + 1):
                if self[i]:
                    acc = acc + self[i] * out[k - i]
            out.append(-acc * inv0)
        return Series(out)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def compose(self, inner: "Series") -> "Series":
        """self(inner(z)); ``inner`` must have zero constant term."""
        if inner[0]:
            raise BadLowestTerms("inner series must have zero constant term")
        n = min(self.order, inner.order)
        result = Series([self[n]], n)
        for k in range(n - 1, -1, -1):
            result = result * inner + Series([self[k]], n)
        return result

    def map(self, fn: Callable[[MultiPoly], MultiPoly]) -> "Series":
        return Series([fn(c) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self[i] == other[i] for i in range(n + 1))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"Series([{body}])"


def continued_fraction(numerator: Callable[[int], Series],
                       denominator: Callable[[int], Series],
                       depth: int) -> Series:
    """Evaluate a_0 / (b_0 - a_1 / (b_1 - a_2 / (b_2 - ...))) bottom up.

    ``numerator(h)`` and ``denominator(h)`` return a_h and b_h.  The tail
    below level ``depth`` is dropped, so the caller picks a depth large
    enough for the order it needs.
    """
    tail = denominator(depth)
    for h in range(depth - 1, -1, -1):
        tail = denominator(h) - numerator(h + 1) / tail
    return numerator(0) / tail


def series_jfraction(gamma: Callable[[int], MultiPoly],
                     lam: Callable[[int], MultiPoly],
                     order: int) -> Series:
    """The J-fraction 1/(1 - g_0 z - l_1 z^2/(1 - g_1 z - ...)) to z^order."""
    z = Series.z(order)
    depth = order // 2 + 1

    def num(h):
        return Series([1], order) if h == 0 else (z * z) * lam(h)

    def den(h):
        return 1 - z * gamma(h)

    return continued_fraction(num, den, depth)


def series_reversion(f: Series) -> Series:
    """Compositional inverse g with f(g(z)) = z, for f = z + O(z^2)."""
    if f[0] or f[1] != ONE:
        raise BadLowestTerms("reversion needs f(0) = 0 and f'(0) = 1")
    z = Series.z(f.order)
    g = z
    for _ in range(f.order):
        g = g - (f.compose(g) - z)
    return g
