import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from btableaux import signedperm as sp
from btableaux.errors import BadGround, ParseError, PrecondFirstNegative
from btableaux.matchings import (OrderedMatching as M, alignments, contract, crossings,
                                 half_arc, is_pignose, matching_to_permutation, phi,
                                 pignose_matching, reverse, rho, rho_power, split_spirals,
                                 standardize)
from btableaux.signedperm import SignedPermutation as SP


@st.composite
def standard_matchings(draw, max_pairs=6):
    m = draw(st.integers(1, max_pairs))
    order = draw(st.permutations(range(1, 2 * m + 1)))
    return M((order[2 * k], order[2 * k + 1]) for k in range(m))


def test_text_form():
    m = M.parse("(1,5);(4,2)")
    assert m.to_text() == "(1,5);(4,2)"
    assert M.parse("") == M(())
    with pytest.raises(ParseError, match="pair 2"):
        M.parse("(1,2);(3)")
    with pytest.raises(BadGround):
        M([(1, 2), (2, 3)])


def test_standardize_example():
    got = standardize(M([(2, 6), (5, 3), (9, 4), (7, 8)]))
    assert got == M([(1, 5), (4, 2), (8, 3), (6, 7)])
    m = M([(1, 3), (4, 2)])
    assert standardize(m) == m


def test_rho_example():
    assert rho(M([(1, 5), (4, 2), (8, 3), (6, 7)])) == M([(8, 4), (3, 1), (7, 2), (5, 6)])
    with pytest.raises(BadGround):
        rho(M([(2, 3)]))


def test_reverse_example():
    assert reverse(M([(1, 2)])) == M([(2, 1)])


@given(standard_matchings())
@settings(max_examples=100)
def test_rotation_and_reversal(m):
    assert rho_power(m, 2 * m.size()) == m
    assert reverse(reverse(m)) == m
    assert crossings(reverse(m)) == crossings(m)


@given(st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))), st.integers(0, 20))
@settings(max_examples=100)
def test_rotation_keeps_crossings_of_pignose_matchings(sigma, k):
    m = pignose_matching(sigma)
    assert is_pignose(m)
    assert crossings(rho_power(m, k)) == crossings(m) == sp.crossings(SP(sigma))
    assert matching_to_permutation(m) == SP(sigma)
    w = sp.weak_excedances(SP(sigma))
    assert crossings(m) + alignments(m) == (w - 1) * (len(sigma) - w)


def test_crossings_small():
    assert crossings(M([(1, 4), (2, 3)])) == 0
    assert crossings(M([(1, 3), (2, 4)])) == 1
    assert not is_pignose(M([(2, 1), (3, 4)]))
    assert half_arc(M([(1, 3), (4, 2)]), 4) == "dl"


def test_split_spirals():
    assert split_spirals(SP((2, 1))).matching == pignose_matching((2, 1))
    s = split_spirals(SP((3, -4, -2, 1)))
    assert (s.extra, s.n) == (2, 4)
    assert s.matching.to_text() == "(1,8);(9,2);(3,12);(7,4);(5,10);(11,6)"


def test_phi_examples():
    assert phi(SP((3, -4, -2, 1))) == SP((-3, 4, -1, -2))
    assert phi(SP((1,))) == SP((-1,))
    with pytest.raises(PrecondFirstNegative):
        phi(SP((-1, 2)))
    with pytest.raises(PrecondFirstNegative):
        phi(SP(()))


@pytest.mark.parametrize("n", range(1, 6))
def test_phi_is_a_bijection_with_statistic_transport(n):
    images = set()
    for p in sp.enumerate_bn(n):
        if p[0] < 0:
            continue
        s = phi(p)
        assert s[0] < 0
        assert sp.crossings(s) == sp.crossings(p)
        assert sp.negatives(s) == sp.negatives(p) + 1
        assert sp.fwex(s) == 2 * n + 1 - sp.fwex(p)
        images.add(s)
    assert len(images) == 2 ** (n - 1) * math.factorial(n)


@given(st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.permutations(range(1, n + 1)),
                        st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))))
@settings(max_examples=100)
def test_contract_undoes_split(data):
    images, signs = data
    p = SP(a * s for a, s in zip(images, signs))
    s = split_spirals(p)
    assert s.extra == sp.negatives(p)
    assert contract(s.matching, s.extra, s.n) == p
