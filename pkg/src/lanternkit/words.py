"""Free groups: reduced words, endomorphisms by generator images, equality.

Generators are 1-based.  A word is stored as a read-only ``int64`` array in
Tietze form (``+i`` for ``x_i``, ``-i`` for ``x_i^-1``) and is always freely
reduced, so equality of group elements is equality of arrays.
"""

import contextlib
import logging
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _kernels

log = logging.getLogger(__name__)

_max_length = 10 ** 7


class WordLengthError(RuntimeError):
    """A word grew past the configured length cap."""


class RankMismatch(ValueError):
    pass


def max_word_length() -> int:
    return _max_length


@contextlib.contextmanager
def word_length_cap(limit: int):
    """Temporarily change the hard cap on word length."""
    global _max_length
    old, _max_length = _max_length, int(limit)
    try:
        yield
    finally:
        _max_length = old


class Letter(NamedTuple):
    index: int
    sign: int = 1

    def to_int(self) -> int:
        return self.index * self.sign


def _as_signed(seq) -> np.ndarray:
    out = []
    for a in seq:
        if isinstance(a, tuple):
            index, sign = a
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign}")
            out.append(int(index) * sign)
        else:
            out.append(int(a))
    return np.array(out, dtype=_kernels.LETTER_DTYPE)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=_kernels.LETTER_DTYPE)
    arr.setflags(write=False)
    return arr


class ReducedWord:
    """A freely reduced word in the free group of rank ``rank``."""

    __slots__ = ("rank", "letters", "_hash")

    def __init__(self, rank: int, letters: np.ndarray, _trusted: bool = False):
        if not _trusted:
            letters = reduce(letters, rank).letters
        self.rank = int(rank)
        self.letters = _frozen(letters)
        self._hash = None

    @classmethod
    def identity(cls, rank: int) -> "ReducedWord":
        return cls(rank, np.empty(0, dtype=_kernels.LETTER_DTYPE), _trusted=True)

    @classmethod
    def generator(cls, i: int, rank: int, sign: int = 1) -> "ReducedWord":
        if not 1 <= i <= rank:
            raise ValueError(f"generator index {i} outside 1..{rank}")
        return cls(rank, np.array([i * sign]), _trusted=True)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        for a in self.letters.tolist():
            yield Letter(abs(a), 1 if a > 0 else -1)

    def __eq__(self, other):
        if not isinstance(other, ReducedWord):
            return NotImplemented
        return self.rank == other.rank and np.array_equal(self.letters, other.letters)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, self.letters.tobytes()))
        return self._hash

    def __mul__(self, other):
        return multiply(self, other)

    def __invert__(self):
        return invert(self)

    def is_identity(self) -> bool:
        return len(self.letters) == 0

    def to_list(self) -> list:
        return self.letters.tolist()

    def __repr__(self):
        if not len(self):
            return f"ReducedWord(rank={self.rank}, 1)"
        body = " ".join(f"x{abs(a)}" + ("" if a > 0 else "^-1") for a in self.letters[:12].tolist())
        more = " ..." if len(self) > 12 else ""
        return f"ReducedWord(rank={self.rank}, {body}{more}, len={len(self)})"


def reduce(seq: Iterable, m: int) -> ReducedWord:
    """Freely reduce a letter sequence in the free group of rank ``m``.

    ``seq`` may hold signed integers or ``(index, sign)`` pairs.
    """
    arr = seq if isinstance(seq, np.ndarray) else _as_signed(seq)
    arr = np.asarray(arr, dtype=_kernels.LETTER_DTYPE)
    if len(arr):
        if np.any(arr == 0) or np.abs(arr).max() > m:
            raise ValueError(f"letter index out of range 1..{m}")
    out, n = _kernels.reduce_letters(arr, _max_length)
    if n < 0:
        raise WordLengthError(f"reduced word exceeds cap of {_max_length} letters")
    return ReducedWord(m, out, _trusted=True)


def _check_rank(a, b):
    if a.rank != b.rank:
        raise RankMismatch(f"rank {a.rank} vs rank {b.rank}")


def multiply(a: ReducedWord, b: ReducedWord) -> ReducedWord:
    _check_rank(a, b)
    # only the seam can cancel
    x, y = a.letters, b.letters
    k = 0
    n = min(len(x), len(y))
    while k < n and x[len(x) - 1 - k] == -y[k]:
        k += 1
    out = np.concatenate([x[:len(x) - k], y[k:]])
    if len(out) > _max_length:
        raise WordLengthError(f"product exceeds cap of {_max_length} letters")
    return ReducedWord(a.rank, out, _trusted=True)


def invert(w: ReducedWord) -> ReducedWord:
    return ReducedWord(w.rank, -w.letters[::-1], _trusted=True)


def conjugate(w: ReducedWord, g: ReducedWord) -> ReducedWord:
    """Return ``g w g^-1``."""
    _check_rank(w, g)
    return multiply(multiply(g, w), invert(g))


def abelianize(w: ReducedWord) -> np.ndarray:
    """Exponent-sum vector of length ``rank``."""
    return _kernels.exponent_sums(w.letters, w.rank)


def _pack(words: Sequence[ReducedWord]):
    lengths = np.fromiter((len(w) for w in words), dtype=np.int64, count=len(words))
    offsets = np.zeros(len(words) + 1, dtype=np.int64)
    np.cumsum(lengths, out=offsets[1:])
    flat = (np.concatenate([w.letters for w in words]) if len(words)
            else np.empty(0, dtype=np.int64))
    return flat, offsets


def _unpack(rank, flat, offsets):
    offs = offsets.tolist()
    return tuple(ReducedWord(rank, flat[offs[i]:offs[i + 1]], _trusted=True)
                 for i in range(len(offs) - 1))


class Automorphism:
    """An automorphism of the free group given by images of the generators.

    Both the forward images and the images of the inverse map are stored.
    The public constructor checks that the two maps are mutually inverse by
    substituting one into the other; internal composites skip the check.
    """

    __slots__ = ("rank", "images", "inverse_images", "_packed", "_packed_inv", "_hash")

    def __init__(self, images, inverse_images, check: bool = True):
        images = tuple(images)
        inverse_images = tuple(inverse_images)
        rank = len(images)
        if len(inverse_images) != rank:
            raise RankMismatch("forward and inverse image lists differ in length")
        for w in images + inverse_images:
            if w.rank != rank:
                raise RankMismatch(f"image of rank {w.rank} in automorphism of rank {rank}")
        self.rank = rank
        self.images = images
        self.inverse_images = inverse_images
        self._packed = _pack(images)
        self._packed_inv = _pack(inverse_images)
        self._hash = None
        if check:
            ident = identity(rank)
            if not (auto_equal(_compose_raw(self, self.inverse), ident)
                    and auto_equal(_compose_raw(self.inverse, self), ident)):
                raise ValueError("image lists are not mutually inverse")

    @classmethod
    def from_lists(cls, images, inverse_images, rank: int = None) -> "Automorphism":
        """Build from plain signed-integer lists (checked)."""
        rank = rank or len(images)
        return cls([reduce(w, rank) for w in images],
                   [reduce(w, rank) for w in inverse_images])

    @property
    def inverse(self) -> "Automorphism":
        return Automorphism(self.inverse_images, self.images, check=False)

    def max_image_length(self) -> int:
        return max((len(w) for w in self.images), default=0)

    def __call__(self, w: ReducedWord) -> ReducedWord:
        return apply(self, w)

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return auto_equal(self, other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __repr__(self):
        return f"Automorphism(rank={self.rank}, max_image_len={self.max_image_length()})"


def identity(rank: int) -> Automorphism:
    gens = [ReducedWord.generator(i, rank) for i in range(1, rank + 1)]
    return Automorphism(gens, gens, check=False)


def _substitute(f: Automorphism, words: Sequence[ReducedWord], inverse=False):
    flat, offsets = _pack(words)
    img_flat, img_off = f._packed_inv if inverse else f._packed
    out, out_off, n = _kernels.substitute_many(flat, offsets, img_flat, img_off, _max_length)
    if n < 0:
        raise WordLengthError(f"image word exceeds cap of {_max_length} letters")
    return _unpack(f.rank, out, out_off)


def apply(f: Automorphism, w: ReducedWord) -> ReducedWord:
    """Image of ``w`` under ``f``."""
    _check_rank(f, w)
    (out,) = _substitute(f, [w])
    log.debug("apply: %d letters -> %d letters", len(w), len(out))
    return out


def apply_many(f: Automorphism, words: Sequence[ReducedWord]):
    for w in words:
        _check_rank(f, w)
    return _substitute(f, list(words))


def _compose_raw(f: Automorphism, g: Automorphism) -> Automorphism:
    fwd = _substitute(f, g.images)
    inv = _substitute(g, f.inverse_images, inverse=True)
    return Automorphism(fwd, inv, check=False)


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    """The map ``f o g``: ``g`` is applied first."""
    _check_rank(f, g)
    return _compose_raw(f, g)


def auto_equal(f: Automorphism, g: Automorphism) -> bool:
    """Exact equality, image by image."""
    _check_rank(f, g)
    return all(a == b for a, b in zip(f.images, g.images))


def first_difference(f: Automorphism, g: Automorphism):
    """Index (1-based) and images of the first generator where ``f`` and ``g`` differ."""
    _check_rank(f, g)
    for i, (a, b) in enumerate(zip(f.images, g.images), start=1):
        if a != b:
            return i, a, b
    return None
