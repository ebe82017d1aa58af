"""The thirteen acceptance criteria, each run exactly and reported as one
PASS/FAIL line in the terminal summary.

Two criteria contain a claim that is false as stated; their tests still
check the claim exactly, record FAIL, and are marked strict xfail so the
rest of the run stays green.  If either claim ever starts to hold, the
strict marker turns the run red.
"""
import math
from collections import Counter

import pytest

from btableaux import ansatz, genfun, matchings, paths, signedperm as sp, tableaux
from btableaux.exactalg import ONE, MultiPoly, binomial, divide_exact, q, t, y
from btableaux.signedperm import SignedPermutation as SP

TYPE_A = tableaux.PermTableau("vhvvhhhv", ((1, 0, 0, 1), (0, 1, 1), (0, 0, 1), ()))
TYPE_B = tableaux.parse_tableau("hvhvhhv\n0*\n11*\n000*\n0101*\n111\n01\n")


def _report(record, number, title, parts):
    failed = [name for name, ok in parts if not ok]
    note = "failed: " + ", ".join(failed) if failed else ""
    record(number, title, not failed, note)
    assert not failed, note


def test_criterion_01_base_polynomials(record_criterion):
    b2 = y ** 4 + (2 * t + t * q) * y ** 3 + (t * t * q + t * t + 1) * y * y + t * y
    parts = [
        ("B_0", genfun.b_poly(0) == ONE),
        ("B_1", genfun.b_poly(1) == y * y + y * t),
        ("B_2", genfun.b_poly(2) == b2),
    ]
    _report(record_criterion, 1, "base polynomials B_0, B_1, B_2", parts)


def test_criterion_02_tableaux_equal_permutations(record_criterion):
    parts = [(f"n={n}", tableaux.b_poly_tableaux(n) == genfun.b_poly_perms(n)) for n in range(7)]
    _report(record_criterion, 2, "tableau sum equals permutation sum, n <= 6", parts)


def test_criterion_03_zigzag_transport(record_criterion):
    parts = [
        ("type A example", str(tableaux.zigzag(TYPE_A)) == "7,1,6,5,3,4,2,8"),
        ("type B example", str(tableaux.zigzag(TYPE_B)) == "-3,6,2,5,-4,1,7"),
    ]
    for n in range(6):
        ok = True
        images = set()
        for T in tableaux.enumerate_ptb(n):
            pi = tableaux.zigzag(T)
            images.add(pi)
            ok &= T.weight_exponents() == (sp.fwex(pi), sp.negatives(pi), sp.crossings(pi))
        ok &= len(images) == 2 ** n * math.factorial(n)
        parts.append((f"transport n={n}", ok))
    _report(record_criterion, 3, "zigzag carries (row, diag, so) to (wex, neg, cro), n <= 5", parts)


def test_criterion_04_symmetry(record_criterion):
    parts = []
    for n in range(1, 6):
        ok = all(genfun.b_star(n, k) == genfun.b_star(n, 2 * n + 1 - k) for k in range(2 * n + 2))
        parts.append((f"B* symmetry n={n}", ok))
    for n in range(1, 5):
        images = set()
        ok = True
        for pi in sp.enumerate_bn(n):
            if pi[0] < 0:
                continue
            s = matchings.phi(pi)
            images.add(s)
            ok &= (s[0] < 0 and sp.crossings(s) == sp.crossings(pi)
                   and sp.negatives(s) == sp.negatives(pi) + 1
                   and sp.fwex(s) == 2 * n + 1 - sp.fwex(pi))
        ok &= len(images) == 2 ** (n - 1) * math.factorial(n)
        parts.append((f"phi n={n}", ok))
    _report(record_criterion, 4, "B*_{n,k} symmetry n <= 5 and phi transport n <= 4", parts)


def test_criterion_05_q_eulerian_values(record_criterion):
    parts = []
    for n in range(8):
        es = [genfun.eulerian_b_poly(n, k) for k in range(n + 1)]
        ok = all(e.subs(q=-1).as_int() == binomial(n, k) for k, e in enumerate(es))
        ok &= all(e.subs(q=0).as_int() == binomial(n, k) ** 2 for k, e in enumerate(es))
        ok &= sum(e.subs(q=1).as_int() for e in es) == 2 ** n * math.factorial(n)
        if n <= 6:
            ok &= all(es[k] == es[n - k] for k in range(n + 1))
        parts.append((f"n={n}", ok))
    _report(record_criterion, 5, "E^B at q = -1, 0, 1 (n <= 7) and symmetry (n <= 6)", parts)


def test_criterion_06_crossings_and_alignments(record_criterion):
    parts = []
    for n in range(7):
        ok = True
        for pi in sp.enumerate_bn(n):
            _, al = sp.full_pignose_counts(pi)
            ok &= 2 * sp.crossings(pi) + al == n * n - 2 * n + sp.fwex(pi)
        parts.append((f"type B n={n}", ok))
    for n in range(8):
        ok = True
        for sigma in sp.enumerate_sn(n):
            k = sp.weak_excedances(sigma)
            ok &= sp.crossings(sigma) + sp.alignments_type_a(sigma) == (k - 1) * (n - k)
        parts.append((f"type A n={n}", ok))
    _report(record_criterion, 6, "2cro + al on B_n (n <= 6), cro + al on S_n (n <= 7)", parts)


def test_criterion_07_matrix_ansatz(record_criterion):
    parts = []
    for which in (1, 2):
        try:
            ansatz.verify_relations(ansatz.solution(which, 8))
            ok = True
        except Exception:
            ok = False
        parts.append((f"relations solution {which}", ok))
        for n in range(7):
            b = genfun.b_poly(n)
            ok = all(ansatz.ansatz_bn(n, which, size) == b for size in (n + 1, n + 2, n + 4))
            parts.append((f"solution {which} n={n}", ok))
    _report(record_criterion, 7, "ansatz relations at N = 8, W(y^2D+E)^nV = B_n for n <= 6", parts)


def test_criterion_08_recurrence_and_fraction(record_criterion):
    parts = [(f"recurrence n={n}", ansatz.recurrence_bn(n) == genfun.b_poly(n)) for n in range(8)]
    series = ansatz.cf_series(6)
    parts += [(f"J-fraction n={n}", series[n] == genfun.b_poly(n)) for n in range(7)]
    minus = ansatz.q_minus_one_series(8)
    for n in range(9):
        closed = genfun.q_minus_one_closed_form(n)
        ok = minus[n] == closed and ansatz.recurrence_bn(n).subs(t=1, q=-1) == closed
        if n <= 7:
            ok &= genfun.b_poly(n).subs(t=1, q=-1) == closed
        parts.append((f"q=-1 n={n}", ok))
    _report(record_criterion, 8, "recurrence n <= 7, J-fraction n <= 6, q = -1 form n <= 8", parts)


# Step weights printed in the two path figures.
FV1_FIGURE = (SP((3, -5, -2, 4, 1)), ["1", "y*t*q", "y^2", "y^2*q", "y*t*q"])
FZ1_FIGURE = (SP((-5, 4, 2, -3, 1)), ["q", "y^2*q", "1", "q", "1"])


@pytest.mark.xfail(strict=True, reason="two of the printed Francon-Viennot step weights are "
                   "not attainable by any step at those heights; see the decisions log")
def test_criterion_09_path_models(record_criterion):
    parts = []
    for n in range(6):
        b = genfun.b_poly(n)
        parts.append((f"sum over M_{n}", paths.path_sum(n, "M") == b))
        parts.append((f"sum over N_{n}", paths.path_sum(n, "N") == b))
    for n in range(5):
        fv, fz = set(), set()
        ok_fv = ok_fz = True
        for pi in sp.enumerate_bn(n):
            p, s = paths.fv1(pi), paths.fz1(pi)
            ps = sp.pattern_stats(pi)
            ok_fv &= p.weight() == MultiPoly.monomial(ps.hasc, sp.negatives(pi), ps.pat)
            ok_fz &= s.weight() == MultiPoly.monomial(sp.fwex(pi), sp.negatives(pi), sp.crossings(pi))
            fv.add(p)
            fz.add(s)
        size = 2 ** n * math.factorial(n)
        parts.append((f"fv1 n={n}", ok_fv and len(fv) == size))
        parts.append((f"fz1 n={n}", ok_fz and len(fz) == size))
    pi, printed = FZ1_FIGURE
    parts.append(("fz1 figure weights", [w.to_text() for w in paths.fz1(pi).step_weights()] == printed))
    pi, printed = FV1_FIGURE
    parts.append(("fv1 figure weights", [w.to_text() for w in paths.fv1(pi).step_weights()] == printed))
    _report(record_criterion, 9, "path sums n <= 5, fv1/fz1 n <= 4, figure step weights", parts)


def _statistic_sum(n, key):
    counts: Counter = Counter()
    for pi in sp.enumerate_bn(n):
        counts[key(pi)] += 1
    return MultiPoly(counts)


@pytest.mark.xfail(strict=True, reason="the flag-descent form fails already at n = 1; "
                   "the flag-ascent exponent 2n - fdes works, see the decisions log")
def test_criterion_10_statistic_sums(record_criterion):
    parts = []
    for n in range(1, 7):
        b = genfun.b_poly(n)

        def first(pi):
            ps = sp.pattern_stats(pi)
            return (ps.hasc, sp.negatives(pi), ps.pat)

        def second(pi):
            ps = sp.pattern_stats(pi)
            return (sp.fdes(pi) + 1, ps.fneg, ps.mot_plus)

        parts.append((f"hasc/neg/pat n={n}", _statistic_sum(n, first) == b))
        parts.append((f"fdes+1/fneg/mot+ n={n}", _statistic_sum(n, second) == b))
    _report(record_criterion, 10, "both statistic sums equal B_n, n <= 6", parts)


def test_criterion_11_closed_formulas(record_criterion):
    parts = []
    for n in range(8):
        b = genfun.b_poly(n)
        nums = [ansatz.closed_form_numerator(n, form) for form in (1, 2)]
        divides = all(divide_exact(x, (1 - q) ** n) * (1 - q) ** n == x for x in nums)
        one, two = ansatz.closed_form_y1q(n, 1), ansatz.closed_form_y1q(n, 2)
        parts.append((f"t=1 n={n}", divides and one == two == b.subs(t=1)))
        if n <= 6:
            parts.append((f"t=0 n={n}", ansatz.closed_form_y0q(n) == b.subs(t=0)))
    _report(record_criterion, 11, "both t = 1 formulas (n <= 7) and the t = 0 formula (n <= 6)", parts)


def test_criterion_12_series_lemmas(record_criterion):
    parts = []
    for name, run in [("relations and series to order 8", lambda: ansatz.schroeder_lemma_check(8))] + [
            (f"Lagrange k={k}", lambda k=k: ansatz.lagrange_check(k, 10)) for k in range(5)]:
        try:
            run()
            parts.append((name, True))
        except Exception:
            parts.append((name, False))
    _report(record_criterion, 12, "continued fraction lemmas to order 8, Lagrange k <= 4", parts)


def test_criterion_13_noncrossing(record_criterion):
    parts = []
    for n in range(8):
        ok = all(genfun.noncrossing_count(n, k) == binomial(n, k) ** 2 for k in range(n + 1))
        parts.append((f"n={n}", ok))
    _report(record_criterion, 13, "noncrossing counts C(n,k)^2, n <= 7", parts)
