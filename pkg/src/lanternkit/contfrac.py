"""Negative-regular continued fractions of p^2/(pq-1) and their move sequences.

Every expansion ``[b_1, ..., b_k]`` (all ``b_i >= 2``) of ``p^2/(pq-1)`` grows
from ``[4]`` by two moves::

    (a)  [b_1, ..., b_k] -> [b_1 + 1, b_2, ..., b_k, 2]
    (b)  [b_1, ..., b_k] -> [2, b_1, ..., b_{k-1}, b_k + 1]
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from math import gcd
from typing import List, Tuple


@dataclass(frozen=True)
class CFExpansion:
    p: int
    q: int
    coefficients: Tuple[int, ...]
    moves: Tuple[Tuple[str, int], ...]
    c_sequence: Tuple[int, ...]
    x_sequence: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.coefficients)

    def value(self) -> Fraction:
        return evaluate(self.coefficients)

    def unit_moves(self) -> List[str]:
        """Moves one at a time, e.g. ``['a', 'a', 'b', ...]``."""
        return [m for m, count in self.moves for _ in range(count)]

    def to_dict(self) -> dict:
        return {
            "p": self.p, "q": self.q,
            "coefficients": list(self.coefficients),
            "moves": [{"move": m, "count": c} for m, c in self.moves],
            "c_sequence": list(self.c_sequence),
            "x_sequence": list(self.x_sequence),
        }


def check_pair(p: int, q: int):
    if not (isinstance(p, int) and isinstance(q, int)) or not p > q > 0:
        raise ValueError(f"need integers p > q > 0, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got ({p}, {q})")


def expand_fraction(num: int, den: int) -> List[int]:
    """Ceiling expansion ``num/den = b_1 - 1/(b_2 - 1/(...))``."""
    if den <= 0 or num <= den:
        raise ValueError("need num > den > 0")
    out = []
    while den:
        b = -(-num // den)
        out.append(b)
        num, den = den, b * den - num
    return out


def evaluate(coefficients) -> Fraction:
    value = Fraction(coefficients[-1])
    for b in reversed(coefficients[:-1]):
        value = b - 1 / value
    return value


def apply_move(coefficients, move: str) -> List[int]:
    c = list(coefficients)
    if move == "a":
        return [c[0] + 1] + c[1:] + [2]
    if move == "b":
        return [2] + c[:-1] + [c[-1] + 1]
    raise ValueError(f"unknown move {move!r}")


def _peel(coefficients) -> List[str]:
    """Unit moves leading from ``[4]`` to ``coefficients``, in forward order."""
    c = list(coefficients)
    undone = []
    while c != [4]:
        if len(c) < 2:
            raise ValueError(f"{list(coefficients)} is not reachable from [4]")
        lead, trail = c[0], c[-1]
        if lead >= 3 and trail == 2:
            c = [lead - 1] + c[1:-1]
            undone.append("a")
        elif lead == 2 and trail >= 3:
            c = c[1:-1] + [trail - 1]
            undone.append("b")
        else:
            raise ValueError(f"{list(coefficients)} is not reachable from [4]")
    return undone[::-1]


def move_sequence(coefficients) -> List[Tuple[str, int]]:
    """Run-length encoded moves from ``[4]``; replayed forward as a check."""
    units = _peel(coefficients)
    replay = [4]
    for m in units:
        replay = apply_move(replay, m)
    if replay != list(coefficients):
        raise AssertionError("move replay does not reproduce the expansion")
    return [(m, len(list(g))) for m, g in groupby(units)]


def cf_expand(p: int, q: int) -> CFExpansion:
    check_pair(p, q)
    coeffs = expand_fraction(p * p, p * q - 1)
    if evaluate(coeffs) != Fraction(p * p, p * q - 1):
        raise AssertionError("expansion does not evaluate back")
    moves = move_sequence(coeffs)
    runs = [count for _, count in moves]
    # the first stage grows the initial 4, later stages grow an entry born as 2
    if not runs:
        runs = [0]
    c_seq = [4 + runs[0]] + [2 + n for n in runs[1:]]
    if sorted(c_seq) != sorted(b for b in coeffs if b != 2):
        raise AssertionError("c-sequence disagrees with the coefficients")
    return CFExpansion(p, q, tuple(coeffs), tuple(moves), tuple(c_seq), tuple(runs))
