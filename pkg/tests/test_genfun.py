import math

import pytest

from btableaux import genfun
from btableaux.checks import eulerian_b_number
from btableaux.exactalg import ONE, MultiPoly, q, t, y

B2_TEXT = "y^4 + 2*y^3*t + y^3*t*q + y^2*t^2 + y^2*t^2*q + y^2 + y*t"
# frozen from the brute-force sum over the 48 elements of B_3
B3_TEXT = ("y^6 + 3*y^5*t + 3*y^5*t*q + y^5*t*q^2 + 3*y^4*t^2 + 5*y^4*t^2*q + 3*y^4*t^2*q^2"
           " + y^4*t^2*q^3 + 3*y^4 + y^4*q + y^3*t^3 + 2*y^3*t^3*q + 2*y^3*t^3*q^2 + y^3*t^3*q^3"
           " + 5*y^3*t + 4*y^3*t*q + y^3*t*q^2 + 2*y^2*t^2 + 3*y^2*t^2*q + y^2*t^2*q^2 + y^2 + y*t")


def test_small_polynomials():
    assert genfun.b_poly(0) == ONE
    assert genfun.b_poly(1) == y * y + y * t
    assert genfun.b_poly(2) == y ** 4 + (2 * t + t * q) * y ** 3 + (t * t * q + t * t + 1) * y * y + t * y
    assert genfun.b_poly(2).to_text() == B2_TEXT
    assert genfun.b_poly(3).to_text() == B3_TEXT


@pytest.mark.parametrize("n", range(6))
def test_total_weight_counts_signed_permutations(n):
    assert genfun.b_poly(n).subs(y=1, t=1, q=1).as_int() == 2 ** n * math.factorial(n)


def test_coefficients():
    assert genfun.b_nk(1, 1) == t and genfun.b_nk(1, 2) == ONE
    assert genfun.b_star(1, 1) == t and genfun.b_star(1, 2) == t
    assert genfun.b_nk(2, 7).is_zero()
    assert genfun.b_star(2, 2) == t * t + t * t * q + t


@pytest.mark.parametrize("n", range(1, 6))
def test_star_symmetry(n):
    for k in range(2 * n + 2):
        assert genfun.b_star(n, k) == genfun.b_star(n, 2 * n + 1 - k)


def test_eulerian_b_examples():
    assert genfun.eulerian_b_poly(2, 1) == 4 + 2 * q
    e = genfun.eulerian_b_poly(2, 1)
    assert (e.subs(q=-1).as_int(), e.subs(q=0).as_int(), e.subs(q=1).as_int()) == (2, 4, 6)
    assert genfun.eulerian_b_poly(3, 1).to_text() == "9 + 9*q + 4*q^2 + q^3"
    assert genfun.eulerian_b_poly(2, 5).is_zero()


@pytest.mark.parametrize("n", range(7))
def test_eulerian_b_properties(n):
    total = 0
    for k in range(n + 1):
        e = genfun.eulerian_b_poly(n, k)
        assert e == genfun.eulerian_b_from_bnk(n, k)
        assert e == genfun.eulerian_b_poly(n, n - k)
        assert e.subs(q=-1).as_int() == math.comb(n, k)
        assert e.subs(q=0).as_int() == math.comb(n, k) ** 2
        assert e.subs(q=1).as_int() == eulerian_b_number(n, k) == genfun.eulerian_b_count(n, k)
        total += e.subs(q=1).as_int()
    assert total == 2 ** n * math.factorial(n)


def test_des_b_counts():
    assert [genfun.eulerian_b_count(2, k) for k in range(3)] == [1, 6, 1]
    assert [genfun.eulerian_b_count(1, k) for k in range(2)] == [1, 1]


def test_eulerian_a():
    assert [genfun.eulerian_a_poly(4, k).to_text() for k in range(1, 5)] == ["1", "6 + 4*q + q^2", "6 + 4*q + q^2", "1"]


@pytest.mark.parametrize("n", range(8))
def test_noncrossing_counts(n):
    for k in range(n + 1):
        assert genfun.noncrossing_count(n, k) == math.comb(n, k) ** 2


@pytest.mark.parametrize("n", range(1, 7))
def test_distribution_identities(n):
    fw = genfun.distribution(n, "fwex")
    fd = genfun.distribution(n, "fdes")
    fe = genfun.distribution(n, "fexc")
    db = genfun.distribution(n, "des_b")
    for k in range(1, 2 * n + 1):
        assert fw[k] == fd[k - 1] == fe[k - 1]
    for k in range(n + 1):
        assert db[k] == sum(c for v, c in fw.items() if v // 2 == k)


def test_tables():
    rows = genfun.gen_table(2, "eulerian-b")
    assert [(n, k, p.to_text(compact=True)) for n, k, p in rows] == [(2, 0, "1"), (2, 1, "4+2*q"), (2, 2, "1")]
    assert [(k, p) for _, k, p in genfun.gen_table(0, "bnk")] == [(0, ONE)]
    assert [k for _, k, _ in genfun.gen_table(2, "bnk")] == [1, 2, 3, 4]
    with pytest.raises(ValueError):
        genfun.gen_table(2, "nope")


@pytest.mark.parametrize("n", range(9))
def test_closed_forms_at_special_values(n):
    if n <= 7:
        assert genfun.b_poly(n).subs(t=1, q=-1) == genfun.q_minus_one_closed_form(n)
        assert genfun.b_poly(n).subs(t=1, q=0) == genfun.narayana_b_closed_form(n)
    assert genfun.q_minus_one_closed_form(n).subs(y=1).as_int() == (2 ** n if n else 1)


def test_specialisations_of_b2():
    assert genfun.b_poly(2).subs(t=1) == y ** 4 + (2 + q) * y ** 3 + (q + 2) * y * y + y
    assert genfun.b_poly(2).subs(t=1, q=0) == MultiPoly.parse("y^4 + 2*y^3 + 2*y^2 + y")
