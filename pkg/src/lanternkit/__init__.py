"""Exact verification of Dehn twist relations on planar surfaces."""

from ._kernels import backend
from .words import Automorphism, ReducedWord, WordLengthError
from .planar import (BACK, FRONT, Boundary, Conjugated, HoledDisk, Hull, MonodromyWord,
                     Outer, Relation, TwistLetter, verify_relation, word_action)

__version__ = "0.1.0"

__all__ = [
    "Automorphism", "BACK", "Boundary", "Conjugated", "FRONT", "HoledDisk", "Hull",
    "MonodromyWord", "Outer", "ReducedWord", "Relation", "TwistLetter", "WordLengthError",
    "backend", "verify_relation", "word_action",
]
