"""Named verification suites shared by the command line and the tests.

Each suite takes an upper bound ``max_n`` and returns a VerifyReport.  A
failing suite carries the first counterexample it met, serialised in the
package's text forms.
"""
from __future__ import annotations

import itertools
import math
import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import ansatz, genfun, matchings, paths, signedperm, tableaux
from .errors import BTableauxError
from .exactalg import MultiPoly, binomial, q, y
from .signedperm import SignedPermutation


@dataclass
class VerifyReport:
    name: str
    param_range: str
    status: str
    counterexample: str | None = None
    seconds: float = 0.0
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def line(self) -> str:
        out = f"{self.name:<13} {self.status.upper():<5} {self.param_range:<16} {self.seconds:7.2f}s"
        if self.detail:
            out += f"  {self.detail}"
        if self.counterexample:
            out += f"  counterexample: {self.counterexample}"
        return out


class Failure(Exception):
    """Raised inside a suite to stop at the first counterexample."""


@dataclass
class Suite:
    name: str
    default_max_n: int
    run: Callable
    describe: str
    integer: bool = False


SUITES: dict = {}


def suite(name: str, default_max_n: int, describe: str, integer: bool = False):
    def wrap(fn):
        SUITES[name] = Suite(name, default_max_n, fn, describe, integer)
        return fn
    return wrap


def require(cond: bool, message: str) -> None:
    if not cond:
        raise Failure(message)


def run_suite(name: str, max_n: int | None = None) -> VerifyReport:
    s = SUITES[name]
    n = s.default_max_n if max_n is None else max_n
    start = time.perf_counter()
    try:
        detail = s.run(n) or ""
        status, cex = "pass", None
    except Failure as exc:
        status, cex, detail = "fail", str(exc), ""
    except BTableauxError as exc:
        status, cex, detail = "fail", f"{type(exc).__name__}: {exc}", ""
    return VerifyReport(name, f"n <= {n}", status, cex, time.perf_counter() - start, detail)


# ------------------------------------------------------------ suites

@suite("zigzag", 5, "zigzag maps are bijections carrying the tableau statistics")
def _zigzag(max_n):
    for n in range(max_n + 1):
        seen = set()
        for T in tableaux.enumerate_ptb(n):
            pi = tableaux.zigzag(T)
            ey, et, eq = T.weight_exponents()
            require(pi not in seen, f"two tableaux map to {pi}")
            seen.add(pi)
            got = (signedperm.fwex(pi), signedperm.negatives(pi), signedperm.crossings(pi))
            require((ey, et, eq) == got, f"{T.to_text()!r} -> {pi}: {(ey, et, eq)} vs {got}")
        require(len(seen) == 2 ** n * math.factorial(n), f"image size {len(seen)} at n={n}")
        seen = set()
        for T in tableaux.enumerate_pt(n):
            sigma = tableaux.zigzag(T)
            require(sigma.is_unsigned() and sigma not in seen, f"type A image {sigma}")
            seen.add(sigma)
            require(T.word.count("v") == signedperm.weak_excedances(sigma)
                    and T.weight_exponents()[2] == signedperm.crossings(sigma),
                    f"type A statistics differ for {sigma}")
        require(len(seen) == math.factorial(n), f"type A image size at n={n}")
    return "both directions"


@suite("symmetry", 5, "B*_{n,k} symmetry, Eulerian symmetries and the map phi")
def _symmetry(max_n):
    for n in range(1, max_n + 1):
        for k in range(2 * n + 2):
            a, b = genfun.b_star(n, k), genfun.b_star(n, 2 * n + 1 - k)
            require(a == b, f"B*_{{{n},{k}}} = {a} but B*_{{{n},{2 * n + 1 - k}}} = {b}")
            plus, minus = genfun.b_plus_minus(n, k)
            require(a == MultiPoly.monomial(0, 1, 0) * plus + minus, f"B* split at n={n}, k={k}")
        for k in range(n + 1):
            require(genfun.eulerian_b_poly(n, k) == genfun.eulerian_b_poly(n, n - k),
                    f"E^B_{{{n},{k}}} not symmetric")
        for k in range(1, n + 1):
            require(genfun.eulerian_a_poly(n, k) == genfun.eulerian_a_poly(n, n + 1 - k),
                    f"E_{{{n},{k}}} not symmetric")
        images = set()
        for pi in signedperm.enumerate_bn(n):
            if pi[0] < 0:
                continue
            s = matchings.phi(pi)
            require(s[0] < 0 and s not in images, f"phi({pi}) = {s}")
            images.add(s)
            require(signedperm.crossings(s) == signedperm.crossings(pi)
                    and signedperm.negatives(s) == signedperm.negatives(pi) + 1
                    and signedperm.fwex(s) == 2 * n + 1 - signedperm.fwex(pi),
                    f"phi({pi}) = {s} breaks a statistic")
        require(len(images) == 2 ** (n - 1) * math.factorial(n), f"phi not onto at n={n}")
    return ""


@suite("cro-al", 5, "crossings plus alignments, and the line-through-a-pignose counts")
def _cro_al(max_n):
    for n in range(max_n + 1):
        for pi in signedperm.enumerate_bn(n):
            c = signedperm.crossings(pi)
            inter, al = signedperm.full_pignose_counts(pi)
            require(inter == 2 * c, f"{pi}: {inter} intersecting pairs, cro = {c}")
            require(2 * c + al == n * n - 2 * n + signedperm.fwex(pi), f"{pi}: 2cro+al = {2 * c + al}")
            require(signedperm.crossings_via_configurations(pi) == c, f"{pi}: configuration count")
            for k in range(1, n + 1):
                up, low = signedperm.line_counts(pi, k)
                require(up == low + 1, f"{pi}: line through +{k}")
                up, low = signedperm.line_counts(pi, -k)
                require(up == low - 1, f"{pi}: line through -{k}")
        for sigma in signedperm.enumerate_sn(n):
            k = signedperm.weak_excedances(sigma)
            total = signedperm.crossings(sigma) + signedperm.alignments_type_a(sigma)
            require(total == (k - 1) * (n - k), f"{sigma}: cro + al = {total}")
    return ""


@suite("ansatz", 5, "matrix ansatz relations and W(y^2 D + E)^n V")
def _ansatz(max_n):
    size = max(8, max_n + 1)
    for which in (1, 2):
        ansatz.verify_relations(ansatz.solution(which, size))
        ansatz.verify_building_blocks(which, size)
        for n in range(max_n + 1):
            b = genfun.b_poly(n)
            require(ansatz.ansatz_bn(n, which) == b, f"solution {which}, n = {n}")
            require(ansatz.ansatz_bn(n, which, n + 3) == b, f"solution {which}, n = {n}, size n+3")
    return f"relations at size {size}"


@suite("recurrence", 5, "B_{n+1} = (y+t) D_q[(1+yt) B_n]")
def _recurrence(max_n):
    for n in range(max_n + 1):
        require(ansatz.recurrence_bn(n) == genfun.b_poly(n), f"n = {n}")
    return ""


@suite("cfrac", 5, "J-fraction expansion and the q = -1, t = 1 specialisation")
def _cfrac(max_n):
    S = ansatz.cf_series(max_n)
    for n in range(max_n + 1):
        require(S[n] == genfun.b_poly(n), f"coefficient of z^{n}")
    sol = ansatz.solution1(max_n + 2)
    for h in range(max_n + 1):
        require(ansatz.cf_gamma(h) == y * y * sol.D.entry(h, h) + sol.E.entry(h, h), f"gamma_{h}")
        if h >= 1:
            lam = (y * y * sol.D.entry(h - 1, h) + sol.E.entry(h - 1, h)) * sol.E.entry(h, h - 1)
            require(ansatz.cf_lambda(h) == lam, f"lambda_{h}")
    order = max(8, max_n)
    Q = ansatz.q_minus_one_series(order)
    for n in range(order + 1):
        closed = genfun.q_minus_one_closed_form(n)
        require(Q[n] == closed, f"q=-1 series, n = {n}")
        require(ansatz.recurrence_bn(n).subs(t=1, q=-1) == closed, f"q=-1 recurrence, n = {n}")
    return f"q=-1 to order {order}"


@suite("paths", 5, "weighted path sums equal B_n")
def _paths(max_n):
    for n in range(max_n + 1):
        b = genfun.b_poly(n)
        require(paths.path_sum(n, "M") == b, f"full paths, n = {n}")
        require(paths.path_sum(n, "N") == b, f"suffixes, n = {n}")
    return ""


@suite("fv1", 5, "Francon-Viennot encoding is a weight-preserving bijection")
def _fv1(max_n):
    for n in range(max_n + 1):
        seen = set()
        for pi in signedperm.enumerate_bn(n):
            p = paths.fv1(pi)
            ps = signedperm.pattern_stats(pi)
            want = MultiPoly.monomial(ps.hasc, signedperm.negatives(pi), ps.pat)
            require(p.weight() == want, f"{pi} -> {p}: weight {p.weight()}")
            require(p not in seen, f"{pi} -> {p} twice")
            seen.add(p)
        require(len(seen) == sum(1 for _ in paths.enumerate_mn(n)), f"not onto at n={n}")
    return ""


@suite("fz1", 5, "Foata-Zeilberger encoding is a weight-preserving bijection")
def _fz1(max_n):
    for n in range(max_n + 1):
        seen = set()
        for pi in signedperm.enumerate_bn(n):
            p = paths.fz1(pi)
            want = MultiPoly.monomial(signedperm.fwex(pi), signedperm.negatives(pi),
                                      signedperm.crossings(pi))
            require(p.start_height == signedperm.negatives(pi), f"{pi}: start height")
            require(p.weight() == want, f"{pi} -> {p}: weight {p.weight()}")
            require(p not in seen, f"{pi} -> {p} twice")
            seen.add(p)
        require(len(seen) == sum(1 for _ in paths.enumerate_nn(n)), f"not onto at n={n}")
    return ""


@suite("bndes", 5, "ascent/pattern and flag-ascent/mot+ models of B_n")
def _bndes(max_n):
    for n in range(1, max_n + 1):
        first: Counter = Counter()
        second: Counter = Counter()
        for pi in signedperm.enumerate_bn(n):
            ps = signedperm.pattern_stats(pi)
            first[(ps.hasc, signedperm.negatives(pi), ps.pat)] += 1
            second[(2 * n - signedperm.fdes(pi), ps.fneg, ps.mot_plus)] += 1
        b = genfun.b_poly(n)
        require(MultiPoly(first) == b, f"hasc/neg/pat at n = {n}")
        require(MultiPoly(second) == b, f"flag ascents/fneg/mot+ at n = {n}")
    return "y exponent 2n - fdes = fdes(-pi) + 1"


@suite("formula", 5, "closed formulas for B_n(y,1,q) and B_n(y,0,q)")
def _formula(max_n):
    for n in range(max_n + 1):
        b = genfun.b_poly(n)
        for form in (1, 2):
            require(ansatz.closed_form_y1q(n, form) == b.subs(t=1), f"form {form}, n = {n}")
        require(ansatz.closed_form_y0q(n) == b.subs(t=0), f"t = 0 formula, n = {n}")
    return ""


@suite("lagrange", 4, "coefficients of C(z)^(k+1)")
def _lagrange(max_n):
    order = max(10, max_n + 2)
    for k in range(max_n + 1):
        ansatz.lagrange_check(k, order)
    return f"k <= {max_n}, order {order}"


@suite("schroeder", 8, "continued fraction lemmas behind the t = 1 formula", integer=True)
def _schroeder(max_n):
    ansatz.schroeder_lemma_check(max_n)
    return f"order {max_n}"


@suite("narayana", 7, "q = 0: Narayana numbers of type B and noncrossing counts", integer=True)
def _narayana(max_n):
    for n in range(max_n + 1):
        ansatz.narayana_b_check(n)
        for k in range(n + 1):
            c = genfun.noncrossing_count(n, k)
            require(c == binomial(n, k) ** 2, f"{c} noncrossing at n={n}, k={k}")
    return ""


def eulerian_b_number(n: int, k: int) -> int:
    """Type B Eulerian numbers by their triangle recurrence."""
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k > n:
        return 0
    return ((2 * k + 1) * eulerian_b_number(n - 1, k)
            + (2 * n - 2 * k + 1) * eulerian_b_number(n - 1, k - 1))


@suite("binomial", 7, "q = -1, 0, 1 values of the q-Eulerian numbers", integer=True)
def _binomial(max_n):
    for n in range(max_n + 1):
        for k in range(n + 1):
            e = genfun.eulerian_b_poly(n, k)
            require(e == genfun.eulerian_b_from_bnk(n, k), f"E^B_{{{n},{k}}} two ways")
            require(e.subs(q=-1) == binomial(n, k), f"E^B_{{{n},{k}}}(-1)")
            require(e.subs(q=0) == binomial(n, k) ** 2, f"E^B_{{{n},{k}}}(0)")
            require(e.subs(q=1) == eulerian_b_number(n, k), f"E^B_{{{n},{k}}}(1)")
        for k in range(1, n + 1):
            e = genfun.eulerian_a_poly(n, k)
            require(e.subs(q=-1) == binomial(n - 1, k - 1), f"E_{{{n},{k}}}(-1)")
            require(n * e.subs(q=0).as_int() == binomial(n, k) * binomial(n, k - 1), f"E_{{{n},{k}}}(0)")
    return ""


def _vector_fdes(P):
    return signedperm.VECTOR_STATS["fdes"](P)


@suite("distribution", 7, "equidistribution of fwex, fdes, fexc and des_B", integer=True)
def _distribution(max_n):
    for n in range(1, max_n + 1):
        fw = genfun.distribution(n, "fwex")
        fd = genfun.distribution(n, "fdes")
        fe = genfun.distribution(n, "fexc")
        db = genfun.distribution(n, "des_b")
        for k in range(2 * n + 2):
            require(fw[k] == fd[k - 1] == fe[k - 1] if k else fw[0] == 0,
                    f"n = {n}, k = {k}: {fw[k]}, {fd[k - 1]}, {fe[k - 1]}")
        half: Counter = Counter()
        for k, c in fw.items():
            half[k // 2] += c
        require(+db == +half, f"des_B vs floor(fwex/2) at n = {n}")
        perms = signedperm.all_signed_array(n, signs=False)
        for mask in itertools.product((1, -1), repeat=n):
            P = perms * np.array(mask, dtype=np.int16)
            bad = np.nonzero(_vector_fdes(P) + _vector_fdes(-P) != 2 * n - 1)[0]
            require(len(bad) == 0, f"fdes(pi) + fdes(-pi) at {SignedPermutation(P[bad[0]]) if len(bad) else ''}")
            # signed inverse: position of |value| k holds sign * index
            order = np.argsort(np.abs(P), axis=1)
            signs = np.sign(np.take_along_axis(P, order, axis=1))
            T = ((order + 1) * signs).astype(np.int16)
            lhs = signedperm.VECTOR_STATS["fwex"](P) + signedperm.VECTOR_STATS["fexc"](T)
            bad = np.nonzero(lhs != 2 * n)[0]
            require(len(bad) == 0, f"fwex + fexc(tr) at {SignedPermutation(P[bad[0]]) if len(bad) else ''}")
    return ""


SUITE_NAMES = tuple(SUITES)


def bound_for(name: str, max_n: int | None, in_all: bool = False) -> int:
    """Bound used for one suite.

    Under ``all`` the integer-valued suites never drop below their own
    default, so ``all --max-n 5`` still runs them to n = 7.
    """
    s = SUITES[name]
    if max_n is None:
        return s.default_max_n
    if in_all and s.integer:
        return max(max_n, s.default_max_n)
    return max_n
