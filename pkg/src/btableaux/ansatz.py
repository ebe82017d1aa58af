"""Algebraic routes to B_n: the matrix ansatz, the q-derivative recurrence,
the J-fraction, and the closed formulas at t = 1 and t = 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotDivisible, RelationViolated, TruncationTooSmall
from .exactalg import (ONE, ZERO, MultiPoly, Series, binomial, continued_fraction,
                       divide_exact, q, q_integer, series_jfraction, series_reversion, t, y)


# ------------------------------------------------------------ matrix ansatz

@dataclass
class BandedOperator:
    """Square N x N matrix stored by diagonals: bands[d][i] is entry (i, i + d)."""

    size: int
    bands: dict = field(default_factory=dict)

    def entry(self, i: int, j: int) -> MultiPoly:
        band = self.bands.get(j - i)
        if band is None or not (0 <= i < self.size and 0 <= j < self.size):
            return ZERO
        start = max(0, -(j - i))
        return band[i - start]

    def set_band(self, d: int, fn) -> None:
        rows = range(max(0, -d), min(self.size, self.size - d))
        self.bands[d] = [MultiPoly.coerce(fn(i)) for i in rows]

    def dense(self) -> list:
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]

    def apply(self, vec: list) -> list:
        out = []
        for i in range(self.size):
            acc = ZERO
            for d in self.bands:
                j = i + d
                if 0 <= j < self.size and vec[j]:
                    acc = acc + self.entry(i, j) * vec[j]
            out.append(acc)
        return out

    def __add__(self, other: "BandedOperator") -> "BandedOperator":
        out = BandedOperator(self.size)
        for d in set(self.bands) | set(other.bands):
            out.set_band(d, lambda i, d=d: self.entry(i, i + d) + other.entry(i, i + d))
        return out

    def scale(self, c) -> "BandedOperator":
        out = BandedOperator(self.size)
        for d in self.bands:
            out.set_band(d, lambda i, d=d: self.entry(i, i + d) * c)
        return out


def _matmul(A: list, B: list) -> list:
    n = len(A)
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            a = A[i][k]
            if not a:
                continue
            row = B[k]
            for j in range(n):
                if row[j]:
                    out[i][j] = out[i][j] + a * row[j]
    return out


@dataclass
class AnsatzSolution:
    name: str
    D: BandedOperator
    E: BandedOperator
    W: list
    V: list

    @property
    def size(self) -> int:
        return self.D.size


def solution1(size: int) -> AnsatzSolution:
    """Upper bidiagonal D, tridiagonal E, W = V = (1, 0, 0, ...)."""
    yt = y * t
    D = BandedOperator(size)
    D.set_band(0, lambda i: q_integer(i + 1))
    D.set_band(1, lambda i: (1 + yt * q ** (i + 1)) * q_integer(i + 1))
    E = BandedOperator(size)
    E.set_band(0, lambda i: (1 + yt * q ** i) * q_integer(i) + yt * q ** i * q_integer(i + 1))
    E.set_band(1, lambda i: yt * q ** i * (1 + yt * q ** (i + 1)) * q_integer(i + 1))
    E.set_band(-1, lambda i: q_integer(i))
    unit = [ONE] + [ZERO] * (size - 1)
    return AnsatzSolution("solution1", D, E, list(unit), list(unit))


def solution2(size: int) -> AnsatzSolution:
    """D and E with entries [i+1] and [i]; W = (1, yt, (yt)^2, ...)."""
    D = BandedOperator(size)
    D.set_band(0, lambda i: q_integer(i + 1))
    D.set_band(1, lambda i: q_integer(i + 1))
    E = BandedOperator(size)
    E.set_band(0, lambda i: q_integer(i))
    E.set_band(-1, lambda i: q_integer(i))
    W = [(y * t) ** i for i in range(size)]
    V = [ONE] + [ZERO] * (size - 1)
    return AnsatzSolution("solution2", D, E, W, V)


def solution(which, size: int) -> AnsatzSolution:
    if which in (1, "1", "solution1"):
        return solution1(size)
    if which in (2, "2", "solution2"):
        return solution2(size)
    raise ValueError(f"unknown solution {which!r}")


def building_blocks(which, size: int) -> tuple:
    """(X, Y) with XY - qYX = I in the interior; D = X(I+Y), E = YX(I+Y)."""
    X = [[ZERO] * size for _ in range(size)]
    Yb = [[ZERO] * size for _ in range(size)]
    for i in range(size - 1):
        X[i][i + 1] = q_integer(i + 1)
        Yb[i + 1][i] = ONE
    if which in (1, "1", "solution1"):
        for i in range(size):
            Yb[i][i] = t * y * q ** i
    return X, Yb


def verify_building_blocks(which, size: int) -> dict:
    X, Yb = building_blocks(which, size)
    ident = [[ONE if i == j else ZERO for j in range(size)] for i in range(size)]
    IY = [[ident[i][j] + Yb[i][j] for j in range(size)] for i in range(size)]
    XY, YX = _matmul(X, Yb), _matmul(Yb, X)
    inner = size - 1
    for i in range(inner):
        for j in range(inner):
            if XY[i][j] - q * YX[i][j] != ident[i][j]:
                raise RelationViolated(f"XY - qYX != I at ({i},{j})")
    sol = solution(which, size)
    D = _matmul(X, IY)
    E = _matmul(Yb, D)
    for i in range(inner):
        for j in range(inner):
            if D[i][j] != sol.D.entry(i, j):
                raise RelationViolated(f"D != X(I+Y) at ({i},{j})")
            if E[i][j] != sol.E.entry(i, j):
                raise RelationViolated(f"E != YX(I+Y) at ({i},{j})")
    return {"which": sol.name, "size": size, "checked": inner * inner}


def verify_relations(sol: AnsatzSolution) -> dict:
    """Check DE = qED + D + E, DV = V and WE = yt WD away from the truncation edge.

    Raises RelationViolated at the first failing entry.
    """
    N = sol.size
    D, E = sol.D.dense(), sol.E.dense()
    DE, ED = _matmul(D, E), _matmul(E, D)
    inner = N - 1
    for i in range(inner):
        for j in range(inner):
            lhs = DE[i][j]
            rhs = q * ED[i][j] + D[i][j] + E[i][j]
            if lhs != rhs:
                raise RelationViolated(f"{sol.name}: DE != qED + D + E at ({i},{j}): {lhs} vs {rhs}")
    DV = sol.D.apply(sol.V)
    for i in range(inner):
        if DV[i] != sol.V[i]:
            raise RelationViolated(f"{sol.name}: DV != V at {i}")
    for j in range(inner):
        we = sum((sol.W[k] * E[k][j] for k in range(N)), ZERO)
        wd = sum((sol.W[k] * D[k][j] for k in range(N)), ZERO)
        if we != y * t * wd:
            raise RelationViolated(f"{sol.name}: WE != yt WD at {j}")
    return {"solution": sol.name, "size": N, "entries": inner * inner + 2 * inner}


def ansatz_bn(n: int, which=1, size: int | None = None) -> MultiPoly:
    """W (y^2 D + E)^n V with matrices truncated to size x size (default n + 1)."""
    if size is None:
        size = n + 1
    if size < n + 1:
        raise TruncationTooSmall(f"size {size} is below n + 1 = {n + 1}")
    sol = solution(which, size)
    M = sol.D.scale(y * y) + sol.E
    vec = list(sol.V)
    for _ in range(n):
        vec = M.apply(vec)
    return sum((w * v for w, v in zip(sol.W, vec) if v), ZERO)


# ------------------------------------------------------------ recurrence

def recurrence_step(b: MultiPoly) -> MultiPoly:
    """B_{n+1} = (y + t) D_q[(1 + yt) B_n], with D_q acting on t."""
    return (y + t) * ((1 + y * t) * b).q_derivative_t()


def recurrence_bn(n: int) -> MultiPoly:
    b = ONE
    for _ in range(n):
        b = recurrence_step(b)
    return b


# ------------------------------------------------------------ J-fraction

def cf_gamma(h: int) -> MultiPoly:
    return y * y * q_integer(h + 1) + q_integer(h) + t * y * q ** h * (q_integer(h) + q_integer(h + 1))


def cf_lambda(h: int) -> MultiPoly:
    if h < 1:
        raise ValueError("lambda_h is defined for h >= 1")
    return y * q_integer(h) ** 2 * (y + t * q ** (h - 1)) * (1 + y * t * q ** h)


def cf_coeffs(h: int) -> tuple:
    return cf_gamma(h), (cf_lambda(h) if h >= 1 else None)


def cf_series(order: int) -> Series:
    """Sum of B_n z^n up to z^order, from the J-fraction."""
    return series_jfraction(cf_gamma, cf_lambda, order)


def q_minus_one_series(order: int) -> Series:
    """(1 - z + zy) / (1 - z - y^2 z) as a series in z."""
    z = Series.z(order)
    return (1 - z + z * y) / (1 - z - z * (y * y))


# ------------------------------------------------ formulas at t = 1 and t = 0

def _staircase(j: int) -> MultiPoly:
    """sum_{l=0}^{2j} y^l q^(l(2j - l + 1)/2)."""
    return MultiPoly({(l, 0, l * (2 * j - l + 1) // 2): 1 for l in range(2 * j + 1)})


def _ballot(n: int, k: int, var_exp: int = 2) -> MultiPoly:
    """sum_{i=0}^{n-k} y^(var_exp i) (C(n,i) C(n,i+k) - C(n,i-1) C(n,i+k+1))."""
    return MultiPoly({(var_exp * i, 0, 0): binomial(n, i) * binomial(n, i + k)
                      - binomial(n, i - 1) * binomial(n, i + k + 1)
                      for i in range(n - k + 1)})


def lemma_coefficient(k: int) -> MultiPoly:
    """c_k = sum_{j=0}^k y^(k-j) (-1)^j sum_{l=0}^{2j} y^l q^(l(2j-l+1)/2)."""
    return sum((y ** (k - j) * (-1) ** j * _staircase(j) for j in range(k + 1)), ZERO)


def closed_form_numerator(n: int, form: int) -> MultiPoly:
    """(1 - q)^n B_n(y, 1, q) written as one of two explicit double sums."""
    if form == 1:
        out = ZERO
        for j in range(n + 1):
            inner = MultiPoly({(i, 0, 0): binomial(n, j + (i + 1) // 2) * binomial(n, i // 2)
                               for i in range(2 * n - 2 * j + 1)})
            out = out + (-1) ** j * inner * _staircase(j)
        return out
    if form == 2:
        return sum((_ballot(n, k) * lemma_coefficient(k) for k in range(n + 1)), ZERO)
    raise ValueError("form must be 1 or 2")


def closed_form_y1q(n: int, form: int = 1) -> MultiPoly:
    """B_n(y, 1, q) from an explicit formula; the division by (1 - q)^n is exact."""
    num = closed_form_numerator(n, form)
    try:
        return divide_exact(num, (1 - q) ** n)
    except NotDivisible:
        raise NotDivisible(f"form {form} numerator for n = {n} is not divisible by (1-q)^{n}") from None


def closed_form_y0q_in_u(n: int) -> MultiPoly:
    """sum_k u^k E_{n,k}(q), written with the letter y standing for u."""
    num = ZERO
    for k in range(n + 1):
        tail = MultiPoly({(i, 0, i * (k + 1 - i)): (-1) ** k for i in range(k + 1)})
        num = num + _ballot(n, k, var_exp=1) * tail
    return divide_exact(num, (1 - q) ** n)


def closed_form_y0q(n: int) -> MultiPoly:
    """B_n(y, 0, q) = sum_k y^(2k) E_{n,k}(q) from the explicit formula."""
    return closed_form_y0q_in_u(n).map_exponents(lambda e: (2 * e[0], e[1], e[2]))


# ------------------------------------------------ continued fraction lemmas

def scaled_gamma(h: int) -> MultiPoly:
    """(1 - q) times gamma_h at t = 1."""
    return y * y * (1 - q ** (h + 1)) + (1 - q ** h) + y * q ** h * (2 - q ** (h + 1) - q ** h)


def scaled_lambda(h: int) -> MultiPoly:
    """(1 - q)^2 times lambda_h at t = 1."""
    return y * (1 - q ** h) ** 2 * (y + q ** (h - 1)) * (1 + y * q ** h)


def d_coeff(m: int) -> MultiPoly:
    if m == 0:
        return ZERO
    h, odd = divmod(m, 2)
    if odd:
        return (1 + y * q ** (h + 1)) * (y + q ** h)
    return y * (1 - q ** h) ** 2


def shifted_jfraction(gamma, lam, order: int, top=None) -> Series:
    """top / ((1+z)(1+y^2 z) - g_0 z - l_1 z^2 / ((1+z)(1+y^2 z) - g_1 z - ...)).

    ``top`` defaults to 1 - yz.
    """
    z = Series.z(order)
    base = (1 + z) * (1 + z * (y * y))
    if top is None:
        top = 1 - z * y

    def num(h):
        return top if h == 0 else (z * z) * lam(h)

    return continued_fraction(num, lambda h: base - z * gamma(h), order // 2 + 1)


def stieltjes_fraction(d, order: int) -> Series:
    """1 / (1 - yz + d_1 z / (1 - yz + d_2 z / (1 - yz + ...)))."""
    z = Series.z(order)

    def num(h):
        return Series([1], order) if h == 0 else -(z * d(h))

    return continued_fraction(num, lambda h: 1 - z * y, order + 1)


def staircase_series(order: int) -> Series:
    """sum_j (-z)^j sum_{i=0}^{2j} y^i q^(i(2j-i+1)/2)."""
    return Series([(-1) ** j * _staircase(j) for j in range(order + 1)])


def lemma_series(order: int) -> Series:
    return Series([lemma_coefficient(k) for k in range(order + 1)])


def schroeder_lemma_check(order: int) -> dict:
    """Check the relations between the scaled J-fraction coefficients and d_m,
    then the three series identities they imply, up to z^order."""
    for h in range(order + 2):
        g = scaled_gamma(h)
        if g != (1 + y) ** 2 - d_coeff(2 * h) - d_coeff(2 * h + 1):
            raise RelationViolated(f"gamma relation fails at h = {h}")
        if g != (1 - q) * cf_gamma(h).subs(t=1):
            raise RelationViolated(f"scaled gamma disagrees with gamma at h = {h}")
        if h >= 1:
            lam = scaled_lambda(h)
            if lam != d_coeff(2 * h - 1) * d_coeff(2 * h):
                raise RelationViolated(f"lambda relation fails at h = {h}")
            if lam != (1 - q) ** 2 * cf_lambda(h).subs(t=1):
                raise RelationViolated(f"scaled lambda disagrees with lambda at h = {h}")
    jf = shifted_jfraction(scaled_gamma, scaled_lambda, order)
    sf = stieltjes_fraction(d_coeff, order)
    if jf != sf:
        raise RelationViolated("J-fraction and S-fraction differ")
    if sf != staircase_series(order):
        raise RelationViolated("S-fraction differs from the staircase series")
    plain = shifted_jfraction(scaled_gamma, scaled_lambda, order, top=Series([1], order))
    if plain != lemma_series(order):
        raise RelationViolated("J-fraction differs from the coefficients c_k")
    return {"order": order, "levels": order + 2}


def compositional_root(order: int) -> Series:
    """C(z), the compositional inverse of z / ((1 + z)(1 + y^2 z))."""
    z = Series.z(order)
    return series_reversion(z / ((1 + z) * (1 + z * (y * y))))


def lagrange_check(k: int, order: int) -> dict:
    """[z^(n+1)] C(z)^(k+1) against the ballot sum, for n + 1 <= order.

    A third value comes from the Lagrange inversion formula
    (k+1)/(n+1) [z^(n-k)] ((1+z)(1+y^2 z))^(n+1).
    """
    C = compositional_root(order)
    P = C ** (k + 1)
    checked = []
    for n in range(k, order):
        series_value = P[n + 1]
        ballot = _ballot(n, k)
        inverted = divide_exact((k + 1) * _z_power_coeff(n + 1, n - k), MultiPoly.const(n + 1))
        if not (series_value == ballot == inverted):
            raise RelationViolated(f"Lagrange coefficient mismatch at k = {k}, n = {n}: "
                                   f"{series_value} / {ballot} / {inverted}")
        checked.append(n)
    return {"k": k, "order": order, "n_checked": checked}


def _z_power_coeff(power: int, m: int) -> MultiPoly:
    """[z^m] ((1 + z)(1 + y^2 z))^power."""
    return sum((binomial(power, a) * binomial(power, m - a) * y ** (2 * (m - a))
                for a in range(m + 1)), ZERO)


def narayana_b_check(n: int) -> dict:
    from .genfun import b_poly, eulerian_b_poly, narayana_b_closed_form

    b = b_poly(n).subs(t=1, q=0)
    if b != narayana_b_closed_form(n):
        raise RelationViolated(f"B_{n}(y,1,0) differs from the closed form")
    for k in range(n + 1):
        if eulerian_b_poly(n, k).subs(q=0) != binomial(n, k) ** 2:
            raise RelationViolated(f"E^B_{{{n},{k}}}(0) != C({n},{k})^2")
    return {"n": n}
