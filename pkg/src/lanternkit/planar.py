"""Holed disks, symbolic curves, and exact verification of twist relations.

The surface is a disk with ``n`` inner holes placed on a circle in the order
``1..n``.  Mapping classes are computed in a punctured-disk model where each
hole ``i`` is replaced by the puncture pair ``{2i-1, 2i}``; boundary twists
about holes then act nontrivially, and the Artin action of the braid group on
the rank-``2n`` free group gives a faithful, exact equality test.

Hull curves enclose a subset of holes and pass on one fixed side of every
hole they skip.  With a single routing for all curves this is the family of
convex curves around holes on a circle; ``FRONT`` and ``BACK`` are mirror
images of each other.
"""

import logging
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Dict, FrozenSet, Optional, Sequence, Tuple, Union

import numpy as np

from .braids import act_in_order, artin_action, BraidWord, interval_twist
from .words import Automorphism, abelianize, auto_equal, compose, first_difference

log = logging.getLogger(__name__)

FRONT = "front"
BACK = "back"
ROUTINGS = (FRONT, BACK)

UNVERIFIED = "unverified"
VERIFIED = "verified"
REFUTED = "refuted"


class SplitError(ValueError):
    pass


class PatternMismatch(SplitError):
    pass


class CommutationError(SplitError):
    pass


class OracleRefutation(SplitError):
    pass


@dataclass(frozen=True)
class HoledDisk:
    """Disk with inner holes ``1..n`` in circular order; the outer boundary is implicit."""

    labels: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        if len(self.labels) < 1:
            raise ValueError("a holed disk needs at least one hole")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("hole labels must be unique")

    @classmethod
    def standard(cls, n: int) -> "HoledDisk":
        return cls(tuple(str(i) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label) + 1

    def label(self, i: int) -> str:
        return self.labels[i - 1]


# -- curves -------------------------------------------------------------------

@dataclass(frozen=True)
class Boundary:
    hole: int


@dataclass(frozen=True)
class Outer:
    pass


@dataclass(frozen=True)
class Hull:
    """Curve enclosing ``holes`` (the side away from the outer boundary)."""

    holes: FrozenSet[int]
    routing: str = BACK

    def __post_init__(self):
        object.__setattr__(self, "holes", frozenset(int(h) for h in self.holes))
        if not self.holes:
            raise ValueError("hull of an empty set")
        if self.routing not in ROUTINGS:
            raise ValueError(f"routing must be one of {ROUTINGS}")

    def is_contiguous(self) -> bool:
        return max(self.holes) - min(self.holes) + 1 == len(self.holes)


@dataclass(frozen=True)
class Conjugated:
    """Image of ``base`` under the mapping class of the temporal word ``conjugator``."""

    conjugator: Tuple["TwistLetter", ...]
    base: "CurveSpec"

    def __post_init__(self):
        object.__setattr__(self, "conjugator", tuple(self.conjugator))
        if isinstance(self.base, Conjugated):
            raise ValueError("nested Conjugated curve; use conjugated() to flatten")


CurveSpec = Union[Boundary, Outer, Hull, Conjugated]


def hull(holes, routing: str = BACK, n: Optional[int] = None) -> CurveSpec:
    """Canonical curve enclosing ``holes``: a single hole gives its boundary curve,
    all ``n`` holes give the outer curve."""
    holes = frozenset(holes)
    if len(holes) == 1:
        return Boundary(next(iter(holes)))
    if n is not None and len(holes) == n:
        return Outer()
    return Hull(holes, routing)


def conjugated(conjugator, base: CurveSpec) -> CurveSpec:
    conjugator = tuple(conjugator)
    if not conjugator:
        return base
    if isinstance(base, Conjugated):
        # g(h(b)): h acts first, so the temporal word is h then g
        return Conjugated(base.conjugator + conjugator, base.base)
    return Conjugated(conjugator, base)


@dataclass(frozen=True)
class TwistLetter:
    curve: CurveSpec
    power: int = 1

    def __post_init__(self):
        if self.power == 0:
            raise ValueError("twist power must be nonzero")


@dataclass(frozen=True)
class MonodromyWord:
    surface: HoledDisk
    letters: Tuple[TwistLetter, ...] = ()

    def __post_init__(self):
        letters = tuple(t if isinstance(t, TwistLetter) else TwistLetter(*t) for t in self.letters)
        object.__setattr__(self, "letters", letters)
        for t in letters:
            validate_curve(t.curve, self.surface)

    def __len__(self):
        """Number of twists with powers expanded."""
        return sum(abs(t.power) for t in self.letters)

    def __add__(self, other: "MonodromyWord") -> "MonodromyWord":
        if self.surface != other.surface:
            raise ValueError("words live on different surfaces")
        return MonodromyWord(self.surface, self.letters + other.letters)

    def expanded(self):
        """Curves one twist at a time (positive powers only)."""
        for t in self.letters:
            if t.power < 0:
                raise ValueError("expanded() needs positive powers")
            for _ in range(t.power):
                yield t.curve

    def curves(self):
        return [t.curve for t in self.letters]


@dataclass(frozen=True)
class Certificate:
    status: str = UNVERIFIED
    diagnostic: Optional[dict] = None


@dataclass(frozen=True)
class Relation:
    surface: HoledDisk
    lhs: MonodromyWord
    rhs: MonodromyWord
    certificate: Certificate = Certificate()
    metadata: Dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.lhs.surface != self.surface or self.rhs.surface != self.surface:
            raise ValueError("relation sides must live on the relation's surface")

    @classmethod
    def of(cls, surface, lhs, rhs, **metadata) -> "Relation":
        return cls(surface, MonodromyWord(surface, tuple(lhs)),
                   MonodromyWord(surface, tuple(rhs)), Certificate(), dict(metadata))

    @property
    def verified(self) -> bool:
        return self.certificate.status == VERIFIED


def validate_curve(curve: CurveSpec, surface: HoledDisk):
    n = surface.n
    if isinstance(curve, Boundary):
        if not 1 <= curve.hole <= n:
            raise ValueError(f"hole {curve.hole} not on a disk with {n} holes")
    elif isinstance(curve, Hull):
        if not all(1 <= h <= n for h in curve.holes):
            raise ValueError(f"hull {sorted(curve.holes)} not inside 1..{n}")
        if len(curve.holes) >= n:
            raise ValueError("hull of every hole is the outer curve; use Outer()")
    elif isinstance(curve, Conjugated):
        if not curve.conjugator:
            raise ValueError("empty conjugator")
        for t in curve.conjugator:
            if not isinstance(t, TwistLetter):
                raise ValueError("malformed conjugator")
            validate_curve(t.curve, surface)
        validate_curve(curve.base, surface)
    elif not isinstance(curve, Outer):
        raise TypeError(f"not a curve: {curve!r}")


# -- doubling and compilation ---------------------------------------------------

def double(surface: HoledDisk) -> Dict[int, Tuple[int, int]]:
    """Puncture pair of each hole in the ``2n``-punctured model."""
    return {i: (2 * i - 1, 2 * i) for i in range(1, surface.n + 1)}


def puncture_to_hole(p: int) -> int:
    return (p + 1) // 2


def slide_braid(punctures: Sequence[int], m: int, sign: int) -> Tuple[BraidWord, int, int]:
    """Braid moving every skipped puncture in ``[min, max]`` to the right of the block.

    Returns the braid and the contiguous range the chosen punctures occupy
    afterwards.  All crossings carry ``sign``.
    """
    chosen = sorted(set(punctures))
    lo, hi = chosen[0], chosen[-1]
    skipped = [k for k in range(lo, hi + 1) if k not in set(chosen)]
    letters = []
    target = hi
    for k in reversed(skipped):
        letters.extend(sign * j for j in range(k, target))
        target -= 1
    return BraidWord(m, tuple(letters)), lo, lo + len(chosen) - 1


@lru_cache(maxsize=8192)
def compile_twist(curve: CurveSpec, surface: HoledDisk) -> Automorphism:
    """Action of the right-handed twist about ``curve`` on the doubled free group."""
    validate_curve(curve, surface)
    m = 2 * surface.n
    if isinstance(curve, Boundary):
        return interval_twist(2 * curve.hole - 1, 2 * curve.hole, m)
    if isinstance(curve, Outer):
        return interval_twist(1, m, m)
    if isinstance(curve, Hull):
        punctures = [p for h in curve.holes for p in (2 * h - 1, 2 * h)]
        if curve.is_contiguous():
            return interval_twist(min(punctures), max(punctures), m)
        sign = 1 if curve.routing == FRONT else -1
        slide, lo, hi = slide_braid(punctures, m, sign)
        a_slide = artin_action(slide)
        # the hull curve is the block curve pulled back along the slide
        return act_in_order([a_slide, interval_twist(lo, hi, m), a_slide.inverse], m)
    if isinstance(curve, Conjugated):
        a_g = word_action(MonodromyWord(surface, curve.conjugator))
        base = compile_twist(curve.base, surface)
        return compose(a_g, compose(base, a_g.inverse))
    raise TypeError(f"not a curve: {curve!r}")


def _letter_action(t: TwistLetter, surface: HoledDisk) -> Automorphism:
    f = compile_twist(t.curve, surface)
    if t.power < 0:
        f = f.inverse
    return f


def word_action(w: MonodromyWord) -> Automorphism:
    """Composite action of a monodromy word; the first letter acts first."""
    m = 2 * w.surface.n
    steps = []
    for t in w.letters:
        f = _letter_action(t, w.surface)
        steps.extend([f] * abs(t.power))
    return act_in_order(steps, m)


# -- homology and disjointness --------------------------------------------------

def _enclosed(curve: CurveSpec, n: int) -> FrozenSet[int]:
    if isinstance(curve, Boundary):
        return frozenset([curve.hole])
    if isinstance(curve, Outer):
        return frozenset(range(1, n + 1))
    if isinstance(curve, Hull):
        return curve.holes
    if isinstance(curve, Conjugated):
        return _enclosed(curve.base, n)
    raise TypeError(f"not a curve: {curve!r}")


def enclosed_holes(curve: CurveSpec, surface: HoledDisk) -> FrozenSet[int]:
    """Holes on the side of ``curve`` away from the outer boundary."""
    return _enclosed(curve, surface.n)


def homology_class(curve: CurveSpec, surface: HoledDisk) -> np.ndarray:
    vec = np.zeros(surface.n, dtype=np.int64)
    for h in _enclosed(curve, surface.n):
        vec[h - 1] = 1
    return vec


def homology_matrix(w: MonodromyWord) -> np.ndarray:
    """One row per twist (powers expanded) holding the curve's homology class."""
    rows = []
    for t in w.letters:
        rows.extend([homology_class(t.curve, w.surface)] * abs(t.power))
    if not rows:
        return np.zeros((0, w.surface.n), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def _crosses(a: FrozenSet[int], b: FrozenSet[int]) -> bool:
    """Whether two hole sets on a circle interleave (their hulls intersect)."""
    if a <= b or b <= a:
        return False
    if a & b:
        return True
    labels = sorted(a | b)
    seq = [0 if h in a else 1 for h in labels]
    changes = sum(1 for x, y in zip(seq, seq[1:]) if x != y)
    # non-interleaved sets on a circle alternate at most twice around it
    if seq[0] != seq[-1]:
        changes += 1
    return changes > 2


def _effective_routing(curve) -> Optional[str]:
    if isinstance(curve, Hull) and not curve.is_contiguous():
        return curve.routing
    return None


def pairwise_disjoint(curves: Sequence[CurveSpec], surface: HoledDisk) -> Optional[bool]:
    """``True``/``False`` when decidable from the curve data, ``None`` otherwise."""
    curves = list(curves)
    unknown = False
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            c1, c2 = curves[i], curves[j]
            if c1 == c2:
                continue
            if isinstance(c1, Conjugated) or isinstance(c2, Conjugated):
                unknown = True
                continue
            r1, r2 = _effective_routing(c1), _effective_routing(c2)
            if r1 and r2 and r1 != r2:
                unknown = True
                continue
            if _crosses(_enclosed(c1, surface.n), _enclosed(c2, surface.n)):
                return False
    return None if unknown else True


# -- verification ---------------------------------------------------------------

def _abelianized_images(f: Automorphism) -> np.ndarray:
    return np.array([abelianize(w) for w in f.images])


def homology_screen(rel: Relation) -> bool:
    """Fast necessary condition: abelianized doubled actions agree."""
    return bool(np.array_equal(_abelianized_images(word_action(rel.lhs)),
                               _abelianized_images(word_action(rel.rhs))))


def verify_relation(rel: Relation) -> Relation:
    """Return ``rel`` with a certificate from the exact free-group oracle."""
    if rel.lhs.surface != rel.rhs.surface:
        raise ValueError("sides on different surfaces")
    left = word_action(rel.lhs)
    right = word_action(rel.rhs)
    if auto_equal(left, right):
        cert = Certificate(VERIFIED)
    else:
        gen, a, b = first_difference(left, right)
        cert = Certificate(REFUTED, {
            "first_differing_generator": gen,
            "lhs_image_length": len(a),
            "rhs_image_length": len(b),
            "lhs_image_prefix": a.to_list()[:40],
            "rhs_image_prefix": b.to_list()[:40],
            "homology_screen_passed": bool(np.array_equal(
                _abelianized_images(left), _abelianized_images(right))),
        })
    return replace(rel, certificate=cert)


def commutes(f: Automorphism, g: Automorphism) -> bool:
    return auto_equal(compose(f, g), compose(g, f))


# -- hole splitting -------------------------------------------------------------

@dataclass(frozen=True)
class SplitCurves:
    """Curves ``a, b, c, x, y`` of the split on the enlarged surface.

    ``a`` is the companion, ``b`` and ``c`` the two halves of the split hole;
    the lhs letter ``z`` becomes ``a b c`` and the rhs letter ``d`` becomes ``x y``.
    """

    a: CurveSpec
    b: CurveSpec
    c: CurveSpec
    x: CurveSpec
    y: CurveSpec


def split_surface(surface: HoledDisk, hole: int, labels: Tuple[str, str] = None) -> HoledDisk:
    """Replace ``hole`` by two adjacent holes (at positions ``hole`` and ``hole + 1``)."""
    old = surface.label(hole)
    labels = labels or (old + "'", old + "''")
    new = list(surface.labels)
    new[hole - 1:hole] = list(labels)
    return HoledDisk(tuple(new))


def lift_curve(curve: CurveSpec, hole: int, new_surface: HoledDisk) -> CurveSpec:
    """Image of ``curve`` after splitting ``hole`` into ``hole, hole + 1``."""
    def up(i):
        return i if i < hole else i + 1

    def lift_set(s):
        out = set()
        for i in s:
            if i == hole:
                out.update((hole, hole + 1))
            else:
                out.add(up(i))
        return out

    if isinstance(curve, Outer):
        return curve
    if isinstance(curve, Boundary):
        if curve.hole == hole:
            return Hull(frozenset((hole, hole + 1)), BACK)
        return Boundary(up(curve.hole))
    if isinstance(curve, Hull):
        return hull(lift_set(curve.holes), curve.routing, new_surface.n)
    if isinstance(curve, Conjugated):
        conj = tuple(TwistLetter(lift_curve(t.curve, hole, new_surface), t.power)
                     for t in curve.conjugator)
        return Conjugated(conj, lift_curve(curve.base, hole, new_surface))
    raise TypeError(f"not a curve: {curve!r}")


def lift_word(w: MonodromyWord, hole: int, new_surface: HoledDisk) -> MonodromyWord:
    return MonodromyWord(new_surface, tuple(
        TwistLetter(lift_curve(t.curve, hole, new_surface), t.power) for t in w.letters))


def _replace_letter(w: MonodromyWord, pos: int, hole: int, new_surface: HoledDisk, pieces):
    letters = lift_word(w, hole, new_surface).letters
    t = letters[pos]
    if t.power < 0:
        raise PatternMismatch("split letters must be positive twists")
    head = [TwistLetter(t.curve, t.power - 1)] if t.power > 1 else []
    before, after = letters[:pos], letters[pos + 1:]
    return before, tuple(head) + tuple(TwistLetter(c) for c in pieces), after


def split_hole(rel: Relation, z_pos: int, d_pos: int, companion: CurveSpec,
               outputs: SplitCurves, labels: Tuple[str, str] = None) -> Relation:
    """Apply the hole-splitting lemma and re-verify the result.

    ``z_pos``/``d_pos`` index letters of ``rel.lhs``/``rel.rhs``.  The lhs
    letter must be the boundary curve of a single hole ``h``; ``companion`` is
    the pair-of-pants boundary next to it (on the original surface).  One
    copy of ``z`` becomes ``a b c`` and one copy of ``d`` becomes ``x y``.
    """
    if not rel.verified:
        raise PatternMismatch("split_hole needs a verified relation")
    surface = rel.surface
    try:
        z = rel.lhs.letters[z_pos]
        d = rel.rhs.letters[d_pos]
    except IndexError:
        raise PatternMismatch("letter position out of range") from None
    if not isinstance(z.curve, Boundary):
        raise PatternMismatch("z must enclose exactly one hole")
    h = z.curve.hole
    enclosed_d = _enclosed(d.curve, surface.n)
    enclosed_a = _enclosed(companion, surface.n)
    if h in enclosed_a or enclosed_d != enclosed_a | {h}:
        raise PatternMismatch("z, companion and d do not bound a pair of pants")

    new_surface = split_surface(surface, h, labels)
    if lift_curve(companion, h, new_surface) != outputs.a:
        raise PatternMismatch("output curve a is not the lifted companion")

    l1, l_mid, l2 = _replace_letter(rel.lhs, z_pos, h, new_surface,
                                    (outputs.a, outputs.b, outputs.c))
    r1, r_mid, r2 = _replace_letter(rel.rhs, d_pos, h, new_surface,
                                    (outputs.x, outputs.y))

    a_twist = compile_twist(outputs.a, new_surface)

    def commutes_with(*letter_groups):
        return all(commutes(a_twist, word_action(MonodromyWord(new_surface, g)))
                   for g in letter_groups)

    # z's own leftover copies commute with a, so they may sit on either side
    if not (commutes_with(l1, r1) or commutes_with(l2, r2)):
        raise CommutationError("companion twist commutes with neither (w1, w1') nor (w2, w2')")

    lhs = MonodromyWord(new_surface, l1 + l_mid + l2)
    rhs = MonodromyWord(new_surface, r1 + r_mid + r2)
    out = verify_relation(Relation(new_surface, lhs, rhs, Certificate(), dict(rel.metadata)))
    if not out.verified:
        raise OracleRefutation(f"split result refuted: {out.certificate.diagnostic}")
    return out


def standard_split_curves(surface: HoledDisk, hole: int, companion: CurveSpec,
                          new_first: bool = True, routing: str = BACK) -> SplitCurves:
    """Circular-model output curves for splitting ``hole`` next to ``companion``.

    The new holes sit at ``hole`` and ``hole + 1``; ``x`` and ``y`` each
    enclose the companion's holes plus one half.  ``new_first`` puts the
    curve around the half at ``hole + 1`` first.
    """
    new_surface = split_surface(surface, hole)
    a = lift_curve(companion, hole, new_surface)
    comp = set(_enclosed(a, new_surface.n))
    first = hull(comp | {hole + 1}, routing, new_surface.n)
    second = hull(comp | {hole}, routing, new_surface.n)
    x, y = (first, second) if new_first else (second, first)
    return SplitCurves(a, Boundary(hole), Boundary(hole + 1), x, y)
