import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lanternkit import _kernels
from lanternkit.braids import interval_twist
from lanternkit.words import (Automorphism, RankMismatch, ReducedWord, WordLengthError, abelianize,
                              apply, auto_equal, compose, conjugate, identity, invert, multiply,
                              reduce, word_length_cap)

RANK = 4
letters = st.integers(1, RANK).flatmap(lambda i: st.sampled_from([i, -i]))
raw_words = st.lists(letters, max_size=60)


def w(*xs, m=RANK):
    return reduce(list(xs), m)


def naive_reduce(seq, rng):
    """Cancel adjacent inverse pairs in random order until none are left."""
    seq = list(seq)
    while True:
        spots = [i for i in range(len(seq) - 1) if seq[i] == -seq[i + 1]]
        if not spots:
            return seq
        i = rng.choice(spots)
        del seq[i:i + 2]


def test_reduce_examples():
    assert w(1, 2, -2, -1).is_identity()
    assert w(1, 1).to_list() == [1, 1]
    assert reduce([(1, 1), (2, -1)], 2).to_list() == [1, -2]


def test_reduce_rejects_bad_index():
    with pytest.raises(ValueError):
        reduce([5], 4)
    with pytest.raises(ValueError):
        reduce([0], 4)


def test_multiply_and_invert_examples():
    assert multiply(w(1), w(-1)).is_identity()
    assert multiply(w(1, 2), w(-2, 3)).to_list() == [1, 3]
    assert invert(w(1, 2)).to_list() == [-2, -1]
    assert conjugate(w(2), w(1)).to_list() == [1, 2, -1]


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        multiply(w(1, m=2), w(1, m=3))


def test_abelianize():
    assert abelianize(w(1, 2, 1)).tolist() == [2, 1, 0, 0]
    assert abelianize(ReducedWord.identity(3)).tolist() == [0, 0, 0]


@settings(max_examples=300, deadline=None)
@given(raw_words, st.randoms(use_true_random=False))
def test_reduction_confluent(seq, rnd):
    assert reduce(seq, RANK).to_list() == naive_reduce(seq, rnd)


@settings(max_examples=300, deadline=None)
@given(raw_words)
def test_reduce_idempotent(seq):
    once = reduce(seq, RANK)
    assert reduce(once.to_list(), RANK) == once


@settings(max_examples=300, deadline=None)
@given(raw_words, raw_words, raw_words)
def test_multiply_associative(a, b, c):
    a, b, c = (reduce(x, RANK) for x in (a, b, c))
    assert (a * b) * c == a * (b * c)
    assert a * ReducedWord.identity(RANK) == a
    assert (a * invert(a)).is_identity()


@settings(max_examples=200, deadline=None)
@given(raw_words, raw_words)
def test_abelianize_conjugation_invariant(a, g):
    a, g = reduce(a, RANK), reduce(g, RANK)
    assert np.array_equal(abelianize(conjugate(a, g)), abelianize(a))
    assert np.array_equal(abelianize(a * g), abelianize(a) + abelianize(g))


@settings(max_examples=200, deadline=None)
@given(raw_words, raw_words)
def test_apply_is_homomorphism(u, v):
    f = compose(interval_twist(1, 3, RANK), interval_twist(2, 4, RANK).inverse)
    u, v = reduce(u, RANK), reduce(v, RANK)
    assert apply(f, u * v) == apply(f, u) * apply(f, v)


def test_compose_with_inverse_is_identity():
    f = compose(interval_twist(1, 3, 5), interval_twist(2, 5, 5))
    assert auto_equal(compose(f, f.inverse), identity(5))
    assert apply(identity(5), w(1, -3, m=5)) == w(1, -3, m=5)


def test_compose_associative_on_interval_twists():
    rng = random.Random(1)
    for _ in range(30):
        f, g, h = (interval_twist(*sorted(rng.sample(range(1, 6), 2)), 5) for _ in range(3))
        assert auto_equal(compose(compose(f, g), h), compose(f, compose(g, h)))


def test_automorphism_rejects_non_invertible():
    with pytest.raises(ValueError):
        Automorphism.from_lists([[1, 1], [2]], [[1], [2]])
    good = Automorphism.from_lists([[1, 2, -1], [1]], [[2], [-2, 1, 2]])
    assert good.rank == 2


def test_length_cap_reports_instead_of_truncating():
    f = interval_twist(1, 2, 2)
    g = ReducedWord.generator(1, 2)
    with word_length_cap(50):
        with pytest.raises(WordLengthError):
            for _ in range(40):
                g = apply(f, g * ReducedWord.generator(2, 2))
    with word_length_cap(3):
        with pytest.raises(WordLengthError):
            reduce([1, 2, 1, 2], 2)


def test_apply_logs_lengths(caplog):
    import logging
    with caplog.at_level(logging.DEBUG, logger="lanternkit.words"):
        apply(interval_twist(1, 2, 2), w(1, m=2))
    assert any("letters" in r.message for r in caplog.records)


@pytest.mark.skipif(not _kernels.HAS_NUMBA, reason="numba not active")
def test_numba_and_python_kernels_agree():
    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(0, 80))
        word = (rng.integers(1, 5, n) * rng.choice([-1, 1], n)).astype(np.int64)
        a, na = _kernels._nb_reduce(word, 10 ** 6)
        b, nb = _kernels._py_reduce(word, 10 ** 6)
        assert na == nb and a.tolist() == b.tolist()
        assert (_kernels._nb_exponent_sums(word, 4).tolist()
                == _kernels._py_exponent_sums(word, 4).tolist())
    f = interval_twist(1, 3, 4)
    words = [reduce((rng.integers(1, 5, 30) * rng.choice([-1, 1], 30)).tolist(), 4)
             for _ in range(20)]
    from lanternkit.words import _pack
    flat, off = _pack(words)
    args = (flat, off, *f._packed, 10 ** 6)
    x = _kernels._nb_substitute_many(*args)
    y = _kernels._py_substitute_many(*args)
    assert x[0].tolist() == y[0].tolist() and x[1].tolist() == y[1].tolist() and x[2] == y[2]
