"""Hot loops of the word engine.

Words are flat ``int64`` arrays in Tietze form: ``+i`` is the generator
``x_i`` and ``-i`` its inverse.  A batch of words is stored CSR-style as a
flat letter array plus an offsets array of length ``count + 1``.

Every kernel has a numba ``@njit`` version and a plain Python/numpy version
with the same signature.  The numba path is used when numba imports and the
environment variable ``LANTERNKIT_DISABLE_NUMBA`` is unset (or ``0``).
Kernels signal an exceeded length cap by returning ``-1`` instead of raising,
so that both paths share the error handling in the caller.
"""

import os

import numpy as np

LETTER_DTYPE = np.int64


def _numba_requested():
    flag = os.environ.get("LANTERNKIT_DISABLE_NUMBA", "").strip().lower()
    return flag in ("", "0", "false", "no")


try:
    if not _numba_requested():
        raise ImportError("numba disabled by LANTERNKIT_DISABLE_NUMBA")
    from numba import njit
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


# -- pure Python / numpy reference path ------------------------------------

def _py_reduce(word, cap):
    stack = []
    for letter in word.tolist():
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
            if len(stack) > cap:
                return np.empty(0, dtype=LETTER_DTYPE), -1
    out = np.array(stack, dtype=LETTER_DTYPE)
    return out, len(stack)


def _py_substitute_many(words, word_offsets, images, image_offsets, cap):
    img = images.tolist()
    ioff = image_offsets.tolist()
    letters = words.tolist()
    woff = word_offsets.tolist()
    out = []
    out_offsets = [0]
    for w in range(len(woff) - 1):
        stack = []
        for letter in letters[woff[w]:woff[w + 1]]:
            g = abs(letter) - 1
            piece = img[ioff[g]:ioff[g + 1]]
            if letter < 0:
                piece = [-a for a in reversed(piece)]
            for a in piece:
                if stack and stack[-1] == -a:
                    stack.pop()
                else:
                    stack.append(a)
                    if len(stack) > cap:
                        return (np.empty(0, dtype=LETTER_DTYPE),
                                np.zeros(1, dtype=LETTER_DTYPE), -1)
        out.extend(stack)
        out_offsets.append(len(out))
    return (np.array(out, dtype=LETTER_DTYPE),
            np.array(out_offsets, dtype=LETTER_DTYPE), len(out))


def _py_exponent_sums(word, rank):
    sums = np.zeros(rank, dtype=LETTER_DTYPE)
    if len(word):
        np.add.at(sums, np.abs(word) - 1, np.sign(word))
    return sums


# -- numba path -------------------------------------------------------------

if HAS_NUMBA:

    @njit(cache=True)
    def _nb_reduce(word, cap):
        out = np.empty(min(len(word), cap + 1), dtype=np.int64)
        top = 0
        for k in range(len(word)):
            a = word[k]
            if top > 0 and out[top - 1] == -a:
                top -= 1
            else:
                if top >= cap:
                    return out[:0], -1
                out[top] = a
                top += 1
        return out[:top].copy(), top

    @njit(cache=True)
    def _nb_substitute_many(words, word_offsets, images, image_offsets, cap):
        nwords = len(word_offsets) - 1
        # unreduced size bounds the output; the cap bounds the allocation
        bound = 0
        for k in range(len(words)):
            g = abs(words[k]) - 1
            bound += image_offsets[g + 1] - image_offsets[g]
        size = bound if bound < cap * max(nwords, 1) else cap * max(nwords, 1)
        out = np.empty(max(size, 1), dtype=np.int64)
        out_offsets = np.zeros(nwords + 1, dtype=np.int64)
        top = 0
        for w in range(nwords):
            base = top
            for k in range(word_offsets[w], word_offsets[w + 1]):
                letter = words[k]
                g = abs(letter) - 1
                lo = image_offsets[g]
                hi = image_offsets[g + 1]
                n = hi - lo
                for j in range(n):
                    if letter > 0:
                        a = images[lo + j]
                    else:
                        a = -images[hi - 1 - j]
                    if top > base and out[top - 1] == -a:
                        top -= 1
                    else:
                        if top - base >= cap or top >= len(out):
                            return out[:0], out_offsets, -1
                        out[top] = a
                        top += 1
            out_offsets[w + 1] = top
        return out[:top].copy(), out_offsets, top

    @njit(cache=True)
    def _nb_exponent_sums(word, rank):
        sums = np.zeros(rank, dtype=np.int64)
        for k in range(len(word)):
            a = word[k]
            if a > 0:
                sums[a - 1] += 1
            else:
                sums[-a - 1] -= 1
        return sums


def reduce_letters(word, cap):
    """Freely reduce ``word``; returns ``(reduced, length)`` or length ``-1``."""
    word = np.ascontiguousarray(word, dtype=LETTER_DTYPE)
    if HAS_NUMBA:
        return _nb_reduce(word, cap)
    return _py_reduce(word, cap)


def substitute_many(words, word_offsets, images, image_offsets, cap):
    """Substitute generator images into a CSR batch of words, reducing as it goes."""
    args = [np.ascontiguousarray(a, dtype=LETTER_DTYPE)
            for a in (words, word_offsets, images, image_offsets)]
    if HAS_NUMBA:
        return _nb_substitute_many(*args, cap)
    return _py_substitute_many(*args, cap)


def exponent_sums(word, rank):
    word = np.ascontiguousarray(word, dtype=LETTER_DTYPE)
    if HAS_NUMBA:
        return _nb_exponent_sums(word, rank)
    return _py_exponent_sums(word, rank)


def backend():
    return "numba" if HAS_NUMBA else "python"
