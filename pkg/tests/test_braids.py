import itertools
import random

import numpy as np
import pytest

from lanternkit.braids import (BraidWord, artin_action, braid_equal, burau_at_minus_one,
                               exponent_sum, generator_action, interval_twist,
                               interval_twist_braid, is_plus_minus_identity, is_pure, permutation)
from lanternkit.words import abelianize, apply, auto_equal, compose, identity, reduce


def B(m, *letters):
    return BraidWord(m, letters)


def test_sigma_images():
    f = artin_action(B(2, 1))
    assert f.images[0].to_list() == [1, 2, -1]
    assert f.images[1].to_list() == [1]
    assert auto_equal(artin_action(B(2, 1, -1)), identity(2))


def test_braid_relations_small():
    assert braid_equal(B(3, 1, 2, 1), B(3, 2, 1, 2))
    assert not braid_equal(B(3, 1, 2), B(3, 2, 1))
    assert braid_equal(B(4, 1, 3), B(4, 3, 1))
    assert braid_equal(B(4, 1, 2, 3) ** 4, interval_twist_braid(1, 4, 4))


def test_invalid_braid():
    with pytest.raises(ValueError):
        B(3, 3)
    with pytest.raises(ValueError):
        B(3, 0)


def test_interval_twist():
    assert auto_equal(interval_twist(2, 2, 4), identity(4))
    assert auto_equal(interval_twist(1, 2, 2), artin_action(B(2, 1, 1)))
    for j, k in [(1, 3), (2, 5), (1, 6), (3, 4)]:
        assert auto_equal(interval_twist(j, k, 6), artin_action(interval_twist_braid(j, k, 6)))
    with pytest.raises(ValueError):
        interval_twist(3, 2, 4)


@pytest.mark.parametrize("m", [3, 5, 8])
def test_full_twist_central(m):
    full = interval_twist(1, m, m)
    for i in range(1, m):
        s = generator_action(i, m)
        assert auto_equal(compose(full, s), compose(s, full))


def test_boundary_word_preserved():
    rng = random.Random(3)
    for _ in range(20):
        m = rng.randint(2, 7)
        b = BraidWord(m, [rng.choice([1, -1]) * rng.randint(1, m - 1) for _ in range(12)])
        boundary = reduce(list(range(1, m + 1)), m)
        assert apply(artin_action(b), boundary) == boundary


def test_burau_basics():
    assert is_plus_minus_identity(burau_at_minus_one(B(3)))
    assert np.array_equal(burau_at_minus_one(B(3, 1, 2, 1)), burau_at_minus_one(B(3, 2, 1, 2)))
    assert is_plus_minus_identity(burau_at_minus_one(B(6, 1, 2, 3, 4, 5) ** 6))


def test_burau_multiplicative_and_unimodular():
    from lanternkit.intlinalg import det
    rng = random.Random(5)
    for _ in range(20):
        u = BraidWord(5, [rng.choice([1, -1]) * rng.randint(1, 4) for _ in range(8)])
        v = BraidWord(5, [rng.choice([1, -1]) * rng.randint(1, 4) for _ in range(8)])
        assert np.array_equal(burau_at_minus_one(u * v),
                              burau_at_minus_one(u).dot(burau_at_minus_one(v)))
        assert abs(det(burau_at_minus_one(u))) == 1


def test_exponent_sum_and_permutation():
    assert exponent_sum(B(3, 1, -1)) == 0 and is_pure(B(3, 1, -1))
    m = 5
    full = B(m, *range(1, m)) ** m
    assert exponent_sum(full) == m * (m - 1) and is_pure(full)
    assert exponent_sum(interval_twist_braid(2, 5, 6)) == 4 * 3
    assert permutation(B(4, 1, 2, 3)) == (4, 1, 2, 3)
    u, v = B(4, 1, 2), B(4, 3, 1)
    pu, pv, puv = permutation(u), permutation(v), permutation(u * v)
    assert all(puv[j] == pv[pu[j] - 1] for j in range(4))


def test_abelianized_action_is_permutation():
    rng = random.Random(11)
    for _ in range(20):
        m = 5
        b = BraidWord(m, [rng.choice([1, -1]) * rng.randint(1, m - 1) for _ in range(10)])
        f = artin_action(b)
        perm = permutation(b)
        w = reduce([rng.choice([1, -1]) * rng.randint(1, m) for _ in range(30)], m)
        expected = np.zeros(m, dtype=np.int64)
        for j, c in enumerate(abelianize(w)):
            expected[perm[j] - 1] += c
        assert np.array_equal(abelianize(apply(f, w)), expected)


def test_action_separates_distinct_burau_images():
    # positive words of length 4 on 4 strands: distinct Burau images force distinct actions
    words = [BraidWord(4, w) for w in itertools.product([1, 2, 3], repeat=4)]
    seen = {}
    for w in words:
        key = burau_at_minus_one(w).tobytes()
        seen.setdefault(key, w)
    reps = list(seen.values())
    for a, b in itertools.combinations(reps[:40], 2):
        assert not braid_equal(a, b)
