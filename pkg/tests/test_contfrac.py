from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from lanternkit.contfrac import (apply_move, cf_expand, evaluate, expand_fraction, move_sequence)
from lanternkit.topology import theta_chain


def test_worked_example():
    e = cf_expand(17, 7)
    assert list(e.coefficients) == [3, 2, 6, 2, 4, 2]
    assert e.moves == (("a", 2), ("b", 2), ("a", 1))
    assert e.c_sequence == (6, 4, 3)
    assert e.x_sequence == (2, 2, 1)
    assert e.value() == Fraction(289, 118)


def test_q_equal_one():
    e = cf_expand(2, 1)
    assert e.coefficients == (4,) and e.moves == () and e.x_sequence == (0,)
    e = cf_expand(5, 1)
    assert e.coefficients == (7, 2, 2, 2)
    assert e.unit_moves() == ["a", "a", "a"]


@pytest.mark.parametrize("p, q", [(4, 2), (3, 3), (2, 3), (3, 0), (0, 0)])
def test_invalid_pairs(p, q):
    with pytest.raises(ValueError):
        cf_expand(p, q)


def test_moves():
    assert apply_move([4], "a") == [5, 2]
    assert apply_move([4], "b") == [2, 5]
    with pytest.raises(ValueError):
        apply_move([4], "c")
    with pytest.raises(ValueError):
        move_sequence([3, 3])


@st.composite
def coprime_pairs(draw):
    p = draw(st.integers(2, 60))
    q = draw(st.integers(1, p - 1).filter(lambda q: gcd(p, q) == 1))
    return p, q


@given(coprime_pairs())
def test_expansion_properties(pq):
    p, q = pq
    e = cf_expand(p, q)
    assert evaluate(e.coefficients) == Fraction(p * p, p * q - 1)
    assert all(b >= 2 for b in e.coefficients)
    assert e.k == len(e.unit_moves()) + 1
    # sum b_i = 3k + 1 for every expansion grown from [4]
    assert sum(e.coefficients) == 3 * e.k + 1
    replay = [4]
    for m in e.unit_moves():
        replay = apply_move(replay, m)
    assert tuple(replay) == e.coefficients
    assert sum(e.x_sequence) == len(e.unit_moves())


@given(st.integers(3, 400), st.integers(1, 399))
def test_expand_fraction_evaluates(num, den):
    if den >= num:
        return
    assert evaluate(expand_fraction(num, den)) == Fraction(num, den)


def test_theta_chain():
    t = theta_chain(17, 7)
    assert t.links == ((-3, -2), (-2, -2), (-2, -2))
    assert not t.degenerate
    single = theta_chain(3, 2)
    assert len(single.c_sequence) == 1
    assert single.links == ((-(single.c_sequence[0] - 2), -(single.c_sequence[0] - 3)),)
    assert theta_chain(5, 1).degenerate
