"""Braid words, the Artin action on the free group, and Burau at t = -1.

A braid word is read left to right as a sequence of moves in time, so the
action of ``uv`` is ``action(v) o action(u)``: ``u`` acts first.  The same
convention governs monodromy words everywhere in the package.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from .words import Automorphism, ReducedWord, auto_equal, compose, identity, reduce


@dataclass(frozen=True)
class BraidWord:
    """Braid on ``strands`` strands; letters are signed generator indices."""

    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for a in self.letters:
            if a == 0 or abs(a) > self.strands - 1:
                raise ValueError(f"generator {a} out of range for {self.strands} strands")

    @classmethod
    def from_pairs(cls, strands, pairs):
        return cls(strands, tuple(i * s for i, s in pairs))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, n: int) -> "BraidWord":
        if n < 0:
            return self.inverse() ** -n
        return BraidWord(self.strands, self.letters * n)

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))


@lru_cache(maxsize=4096)
def _sigma(i: int, sign: int, m: int) -> Automorphism:
    gens = [ReducedWord.generator(k, m) for k in range(1, m + 1)]
    pos = list(gens)
    neg = list(gens)
    # sigma_i:  x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
    pos[i - 1] = reduce([i, i + 1, -i], m)
    pos[i] = gens[i - 1]
    # sigma_i^-1:  x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    neg[i - 1] = gens[i]
    neg[i] = reduce([-(i + 1), i, i + 1], m)
    if sign > 0:
        return Automorphism(pos, neg, check=False)
    return Automorphism(neg, pos, check=False)


def generator_action(a: int, m: int) -> Automorphism:
    """Action of the single letter ``sigma_|a|^sign(a)`` on the rank-``m`` free group."""
    return _sigma(abs(a), 1 if a > 0 else -1, m)


def act_in_order(actions, rank: int) -> Automorphism:
    """Composite of ``actions`` taken as a temporal sequence (first acts first)."""
    acc = identity(rank)
    for f in actions:
        acc = compose(f, acc)
    return acc


def artin_action(b: BraidWord) -> Automorphism:
    return act_in_order((generator_action(a, b.strands) for a in b.letters), b.strands)


@lru_cache(maxsize=4096)
def interval_twist(j: int, k: int, m: int) -> Automorphism:
    """Twist about a round curve enclosing punctures ``j..k``.

    With ``delta = x_j ... x_k`` each enclosed generator is conjugated by
    ``delta``; the rest are fixed.
    """
    if not 1 <= j <= k <= m:
        raise ValueError(f"interval {j}..{k} not inside 1..{m}")
    delta = list(range(j, k + 1))
    inv_delta = [-a for a in reversed(delta)]
    fwd, bwd = [], []
    for i in range(1, m + 1):
        if j <= i <= k:
            fwd.append(reduce(delta + [i] + inv_delta, m))
            bwd.append(reduce(inv_delta + [i] + delta, m))
        else:
            g = ReducedWord.generator(i, m)
            fwd.append(g)
            bwd.append(g)
    return Automorphism(fwd, bwd, check=False)


def interval_twist_braid(j: int, k: int, m: int) -> BraidWord:
    """``(sigma_j ... sigma_{k-1})^(k-j+1)``, the braid word of :func:`interval_twist`."""
    block = tuple(range(j, k))
    return BraidWord(m, block * (k - j + 1))


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    if b1.strands != b2.strands:
        raise ValueError("strand counts differ")
    return auto_equal(artin_action(b1), artin_action(b2))


def burau_at_minus_one(b: BraidWord) -> np.ndarray:
    """Reduced Burau matrix at ``t = -1`` as an exact object-dtype array.

    Uses sigma_i -> I + (block acting on columns i-1, i, i+1); at t = -1
    right multiplication by sigma_i only changes column ``i``:
    ``col_i <- col_i - col_{i-1} + col_{i+1}``.
    """
    n = b.strands - 1
    mat = np.empty((n, n), dtype=object)
    for r in range(n):
        for c in range(n):
            mat[r, c] = 1 if r == c else 0
    for a in b.letters:
        i = abs(a) - 1
        s = 1 if a > 0 else -1
        col = mat[:, i].copy()
        if i - 1 >= 0:
            col = col - s * mat[:, i - 1]
        if i + 1 < n:
            col = col + s * mat[:, i + 1]
        mat[:, i] = col
    return mat


def is_plus_minus_identity(mat: np.ndarray) -> bool:
    n = mat.shape[0]
    eye = np.eye(n, dtype=np.int64).astype(object)
    return bool(np.all(mat == eye) or np.all(mat == -eye))


def exponent_sum(b: BraidWord) -> int:
    return sum(1 if a > 0 else -1 for a in b.letters)


def permutation(b: BraidWord) -> Tuple[int, ...]:
    """Final position (1-based) of the strand starting at each position."""
    # strand currently at each position
    at = list(range(1, b.strands + 1))
    for a in b.letters:
        i = abs(a) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    pos_of = {strand: p for p, strand in enumerate(at, start=1)}
    return tuple(pos_of[s] for s in range(1, b.strands + 1))


def is_pure(b: BraidWord) -> bool:
    return permutation(b) == tuple(range(1, b.strands + 1))
