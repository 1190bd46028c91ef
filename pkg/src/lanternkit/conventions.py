"""Pinned conventions.

Everything here was fixed by running the exact oracle on the smallest
instance of each family; regression tests keep it that way.  ``LEDGER`` is
what ``--convention-ledger`` prints.
"""

from typing import NamedTuple

from .planar import BACK, FRONT


class Convention(NamedTuple):
    routing: str = BACK
    reverse: bool = False  # reverse the circular order of the inner holes


# family -> convention that verified on the smallest instance
PINNED = {
    "lantern": Convention(BACK, False),
    "daisy": Convention(FRONT, False),
    "wfam": Convention(BACK, False),
    "nfam": Convention(BACK, False),
    "linear": Convention(BACK, False),
}

SEARCH_SPACE = tuple(Convention(r, rev) for r in (BACK, FRONT) for rev in (False, True))

LEDGER = {
    "composition": "monodromy and braid words are temporal: the first letter acts first, "
                   "so action(uv) = action(v) o action(u)",
    "artin_action": "sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i",
    "doubling": "hole i -> punctures 2i-1, 2i; Boundary(i) = twist about punctures 2i-1..2i; "
                "Outer = twist about all punctures",
    "hull": "slide skipped puncture pairs rightward past the enclosed ones, all crossings of one "
            "sign (front = positive, back = negative), twist the contiguous block, slide back",
    "families": {
        "lantern": {"holes": ["a", "b", "c"], "routing": PINNED["lantern"].routing,
                    "rhs": "Hull{1,2} Hull{2,3} Hull{1,3}"},
        "daisy": {"holes": "a0, a1..ap", "outer": "a_{p+1}", "routing": PINNED["daisy"].routing},
        "wfam": {"holes": "a1..a_{p+2}, b1..b_{q+2}, c1..c_{r+2}",
                 "routing": PINNED["wfam"].routing},
        "nfam": {"holes": "a1..a_{p+1}, c1..c_{q+2}, b_{r+3}..b1", "outer": "c_{q+3}",
                 "routing": PINNED["nfam"].routing},
        "linear": {"seed": "lantern", "routing": PINNED["linear"].routing,
                   "split": "new halves sit at the split hole's position; the first new rhs "
                            "curve encloses the half placed after it, the other order is the "
                            "fallback"},
    },
}
