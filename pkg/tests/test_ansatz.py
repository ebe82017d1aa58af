import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from btableaux import ansatz, genfun
from btableaux.errors import RelationViolated, TruncationTooSmall
from btableaux.exactalg import ONE, ZERO, MultiPoly, Series, divide_exact, q, t, y


def _text(matrix):
    return [[e.to_text() for e in row] for row in matrix]


def test_leading_blocks():
    s1 = ansatz.solution1(2)
    assert _text(s1.D.dense()) == [["1", "y*t*q + 1"], ["0", "1 + q"]]
    s2 = ansatz.solution2(2)
    assert s2.D.entry(0, 0) == s2.D.entry(0, 1) == ONE
    assert s2.E.entry(1, 0) == s2.E.entry(1, 1) == ONE
    for s in (s1, s2):
        assert s.V == [ONE, ZERO]


@pytest.mark.parametrize("which", [1, 2])
@pytest.mark.parametrize("size", [6, 8])
def test_relations_hold(which, size):
    ansatz.verify_relations(ansatz.solution(which, size))
    ansatz.verify_building_blocks(which, size)


def test_perturbed_entry_is_caught():
    s = ansatz.solution1(6)
    band = s.D.bands[0]
    band[2] = band[2] + 1
    with pytest.raises(RelationViolated):
        ansatz.verify_relations(s)


@pytest.mark.parametrize("n", range(6))
def test_ansatz_matches_brute_force(n):
    b = genfun.b_poly(n)
    for which in (1, 2):
        for size in (n + 1, n + 2, n + 4):
            assert ansatz.ansatz_bn(n, which, size) == b


def test_truncation_guard():
    with pytest.raises(TruncationTooSmall):
        ansatz.ansatz_bn(3, 1, 3)


def test_recurrence():
    y_, t_ = y, t
    assert ansatz.recurrence_step(ONE) == y_ * y_ + y_ * t_
    assert ansatz.recurrence_bn(2) == genfun.b_poly(2)
    for n in range(8):
        assert ansatz.recurrence_bn(n) == genfun.b_poly(n)


def test_jfraction_coefficients():
    assert ansatz.cf_gamma(0) == y * y + t * y
    assert ansatz.cf_lambda(1) == y * (y + t) * (1 + y * t * q)
    s = ansatz.solution1(8)
    for h in range(7):
        assert ansatz.cf_gamma(h) == y * y * s.D.entry(h, h) + s.E.entry(h, h)
        if h:
            lam = (y * y * s.D.entry(h - 1, h) + s.E.entry(h - 1, h)) * s.E.entry(h, h - 1)
            assert ansatz.cf_lambda(h) == lam


def test_jfraction_series():
    series = ansatz.cf_series(6)
    for n in range(7):
        assert series[n] == genfun.b_poly(n)


def test_q_minus_one_series():
    series = ansatz.q_minus_one_series(8)
    for n in range(9):
        assert series[n] == genfun.q_minus_one_closed_form(n)


def test_closed_forms_small():
    assert ansatz.closed_form_y1q(1) == y * y + y
    assert ansatz.closed_form_y1q(2) == y ** 4 + (2 + q) * y ** 3 + (q + 2) * y * y + y
    assert ansatz.closed_form_y0q(1) == y * y
    assert divide_exact(ansatz.closed_form_numerator(2, 1), (1 - q) ** 2) == genfun.b_poly(2).subs(t=1)


@pytest.mark.parametrize("n", range(8))
def test_closed_forms(n):
    b = genfun.b_poly(n)
    one = ansatz.closed_form_y1q(n, 1)
    assert one == ansatz.closed_form_y1q(n, 2) == b.subs(t=1)
    for form in (1, 2):
        num = ansatz.closed_form_numerator(n, form)
        assert divide_exact(num, (1 - q) ** n) * (1 - q) ** n == num
    assert ansatz.closed_form_y0q(n) == b.subs(t=0)


def test_y0q_against_type_a_tableaux():
    from btableaux.tableaux import e_poly_type_a

    for n in range(1, 6):
        want = sum((y ** (2 * k) * e_poly_type_a(n, k) for k in range(1, n + 1)), ZERO)
        assert ansatz.closed_form_y0q(n) == want
        assert ansatz.closed_form_y0q_in_u(n).subs(q=0) == MultiPoly(
            {(k, 0, 0): genfun.binomial(n, k) * genfun.binomial(n, k - 1) // n for k in range(1, n + 1)})


def test_narayana_b():
    assert genfun.b_poly(2).subs(t=1, q=0) == MultiPoly.parse("y^4 + 2*y^3 + 2*y^2 + y")
    assert [genfun.eulerian_b_poly(2, k).subs(q=0).as_int() for k in range(3)] == [1, 4, 1]
    for n in range(8):
        ansatz.narayana_b_check(n)


def test_lemma_relations_first_level():
    d1 = (1 + y * q) * (y + 1)
    d2 = y * (1 - q) ** 2
    assert ansatz.d_coeff(1) == d1 and ansatz.d_coeff(2) == d2
    assert ansatz.scaled_lambda(1) == d1 * d2
    assert ansatz.scaled_lambda(1) == (1 - q) ** 2 * ansatz.cf_lambda(1).subs(t=1)


def test_series_lemmas():
    assert ansatz.stieltjes_fraction(ansatz.d_coeff, 0) == Series([1], 0)
    assert ansatz.staircase_series(0) == Series([1], 0)
    six = ansatz.shifted_jfraction(ansatz.scaled_gamma, ansatz.scaled_lambda, 6)
    assert six == ansatz.stieltjes_fraction(ansatz.d_coeff, 6) == ansatz.staircase_series(6)
    ansatz.schroeder_lemma_check(8)


def test_lagrange_small():
    C = ansatz.compositional_root(3)
    assert C[1] == ONE
    assert C[2] == 1 + y * y
    for k in range(5):
        ansatz.lagrange_check(k, 10)


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5))
@settings(max_examples=25)
def test_stieltjes_equals_contracted_jfraction(ds):
    # any S-fraction with coefficients d_m contracts to the J-fraction whose
    # coefficients are built from d_m as in the lemma relations
    def d(m):
        if m == 0 or m > 2 * len(ds):
            return ZERO
        a, b = ds[(m - 1) // 2]
        return a + b * q if m % 2 else a * y + b
    order = 6

    def gamma(h):
        return (1 + y) ** 2 - d(2 * h) - d(2 * h + 1)

    def lam(h):
        return d(2 * h - 1) * d(2 * h)

    assert ansatz.shifted_jfraction(gamma, lam, order) == ansatz.stieltjes_fraction(d, order)


@pytest.mark.parametrize("n", range(7))
def test_every_route_agrees(n):
    from btableaux.paths import path_sum
    from btableaux.tableaux import b_poly_tableaux

    series = ansatz.cf_series(n)
    values = [genfun.b_poly_perms(n), ansatz.recurrence_bn(n), ansatz.ansatz_bn(n, 1),
              ansatz.ansatz_bn(n, 2), series[n]]
    if n <= 5:
        values += [b_poly_tableaux(n), path_sum(n, "M"), path_sum(n, "N")]
    assert all(v == values[0] for v in values)
