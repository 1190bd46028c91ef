"""Chain-twist words on a closed genus-g surface and the daisy substitution in them.

Chain twists ``c_1..c_{2g+1}`` are modeled by braid generators
``sigma_1..sigma_{2g+1}`` on ``2g+2`` strands.  Relators of the closed
mapping class group are then only screened (Burau at ``t = -1``); equalities
that hold in the braid group itself are checked exactly.
"""

import logging
from typing import List, Sequence

from .braids import BraidWord, braid_equal, burau_at_minus_one, exponent_sum, is_plus_minus_identity
from .topology import FibrationInvariants, blowdown_invariants, homeo_type, linear_chain

log = logging.getLogger(__name__)

MAX_GENUS = 4


def _check_genus(g: int):
    if not isinstance(g, int) or g < 2:
        raise ValueError(f"genus must be an integer >= 2, got {g!r}")


def chain(g: int, letters: Sequence[int]) -> BraidWord:
    return BraidWord(2 * g + 2, tuple(letters))


def _up(lo: int, hi: int) -> List[int]:
    return list(range(lo, hi + 1))


def _down(hi: int, lo: int) -> List[int]:
    return list(range(hi, lo - 1, -1))


def build_CI(g: int) -> BraidWord:
    _check_genus(g)
    return chain(g, _up(1, 2 * g + 1) * (2 * g + 2))


def build_CIbar(g: int) -> BraidWord:
    _check_genus(g)
    return chain(g, _down(2 * g + 1, 1) * (2 * g + 2))


def _i_half(g: int) -> List[int]:
    return _up(1, 2 * g) + [2 * g + 1, 2 * g + 1] + _down(2 * g, 1)


def build_I2(g: int) -> BraidWord:
    _check_genus(g)
    return chain(g, _i_half(g) * 2)


def build_U(g: int) -> BraidWord:
    """``I^2`` with its first and last ``c_1`` removed."""
    _check_genus(g)
    return chain(g, (_i_half(g) * 2)[1:-1])


def build_W(g: int) -> BraidWord:
    _check_genus(g)
    n = 2 * g + 1
    letters = [2, 3, 1, 2]
    for j in range(4, n + 1):
        letters += [j, j - 1, j - 2]
    letters += [n, n - 1, n]
    letters += (_up(1, n) + _up(2, n)) * (g - 2)
    letters += _up(1, n) * 3
    return chain(g, letters)


def build_Wbar(g: int) -> BraidWord:
    """The mirror-order word: ``W`` read backwards."""
    _check_genus(g)
    return chain(g, build_W(g).letters[::-1])


def daisy_lhs_image(g: int) -> BraidWord:
    """``c_1^{2g-2} c_3^2 ... c_{2g-1}^2``."""
    _check_genus(g)
    letters = [1] * (2 * g - 2)
    for i in range(3, 2 * g, 2):
        letters += [i, i]
    return chain(g, letters)


def build_rho(g: int) -> BraidWord:
    _check_genus(g)
    return build_Wbar(g) * daisy_lhs_image(g) * build_W(g) * build_U(g) ** (g - 2)


def _odd_down(g):
    return chain(g, _down(2 * g - 1, 1)[::2])


def _odd_up(g):
    return chain(g, _up(1, 2 * g - 1)[::2])


def find_subword(word: BraidWord, sub: BraidWord) -> int:
    """First position of ``sub`` as a contiguous subword, or ``-1``."""
    w, s = word.letters, sub.letters
    for i in range(len(w) - len(s) + 1):
        if w[i:i + len(s)] == s:
            return i
    return -1


def _check(name, passed, kind, **extra):
    return dict(name=name, passed=bool(passed), kind=kind, **extra)


def verify_rho(g: int, exact_stages: bool = True) -> dict:
    """Screen the genus-g relators and check the braid-level equalities.

    ``kind`` of each check: ``exact`` (decided completely), ``necessary``
    (Burau screening of a closed-surface relator), or ``relator-level``
    (the step also uses moves valid only for relators; a failed braid
    equality there is reported, not treated as an error).
    """
    _check_genus(g)
    rho = build_rho(g)
    ci, cibar, i2, w, wbar, u = (build_CI(g), build_CIbar(g), build_I2(g), build_W(g),
                                 build_Wbar(g), build_U(g))
    c1sq = chain(g, [1, 1])
    checks = []
    pos = find_subword(rho, daisy_lhs_image(g))
    checks.append(_check("daisy_subword_present", pos >= 0, "exact", position=pos))
    for name, word in (("C_I", ci), ("I2", i2), ("rho", rho)):
        checks.append(_check(f"burau_{name}_plus_minus_identity",
                             is_plus_minus_identity(burau_at_minus_one(word)), "necessary"))
    lengths = {"C_I": len(ci), "I2": len(i2), "W": len(w), "Wbar": len(wbar), "U": len(u),
               "rho": len(rho)}
    expected = {"C_I": (2 * g + 1) * (2 * g + 2), "I2": 8 * g + 4, "W": 4 * g * g + 5 * g + 2,
                "Wbar": 4 * g * g + 5 * g + 2, "U": 8 * g + 2, "rho": 16 * g * g - 4}
    checks.append(_check("lengths_match_formulas", lengths == expected, "exact"))
    checks.append(_check("exponent_sum_rho", exponent_sum(rho) == 16 * g * g - 4, "exact"))
    if exact_stages:
        checks.append(_check("C_I_equals_odd_chain_times_W",
                             braid_equal(_odd_up(g) * w, ci), "exact"))
        checks.append(_check("CIbar_equals_Wbar_times_odd_chain",
                             braid_equal(wbar * _odd_down(g), cibar), "exact"))
        checks.append(_check("I2_conjugate_to_c1sq_U",
                             braid_equal(chain(g, [-1]) * c1sq * u * chain(g, [1]), i2), "exact"))
        gathered = wbar * _odd_down(g) * _odd_up(g) * w * (c1sq * u) ** (g - 2)
        checks.append(_check("rho_equals_gathered_relators", braid_equal(rho, gathered),
                             "exact" if g == 2 else "relator-level"))
    hard = [c for c in checks if c["kind"] != "relator-level"]
    return {"g": g, "lengths": lengths, "checks": checks,
            "all_passed": all(c["passed"] for c in hard)}


def burau_screen(word: BraidWord) -> bool:
    return is_plus_minus_identity(burau_at_minus_one(word))


def embed_daisy(g: int) -> dict:
    """Daisy substitution into ``rho`` for ``p = 2g - 2``.

    Daisy holes: center ``a0`` and petals ``a1..a_{p+1}`` (the last one the
    outer boundary).  Petals ``i`` and ``p + 3 - i`` share the image
    ``c_{2i-1}``; the center goes to ``c_1``.
    """
    _check_genus(g)
    p = 2 * g - 2
    k = g - 1
    f = {"a0": 1}
    for i in range(1, k + 2):
        f[f"a{i}"] = 2 * i - 1
        f[f"a{p + 3 - i}"] = 2 * i - 1
    # daisy lhs: a0^{p-1} a1 ... a_{p+1}
    lhs_image = [f["a0"]] * (p - 1) + [f[f"a{i}"] for i in range(1, p + 2)]
    target = daisy_lhs_image(g).letters
    # lhs curves are disjoint, so the image word may be reordered freely
    commuting = all(abs(x - y) != 1 for x in lhs_image for y in lhs_image)
    if sorted(lhs_image) != sorted(target) or not commuting:
        raise AssertionError("daisy lhs does not map onto the odd-chain subword")
    rho = build_rho(g)
    pos = find_subword(rho, daisy_lhs_image(g))
    if pos < 0:
        raise AssertionError("daisy subword not found in rho")
    rhs_symbols = [f"f(x{i})" for i in range(1, p + 2)]
    tokens = [f"c{a}" for a in rho.letters]
    rho_prime = tokens[:pos] + rhs_symbols + tokens[pos + len(target):]
    preimages = {}
    for name, c in f.items():
        preimages.setdefault(f"c{c}", []).append(name)
    return {"g": g, "p": p, "mapping": {k: f"c{v}" for k, v in f.items()},
            "preimages": preimages, "position": pos, "rho_prime": rho_prime,
            "length_rho": len(rho), "length_rho_prime": len(rho_prime)}


def sigma_rho(g: int) -> int:
    """Signature of X(rho); an input from the literature, not computed here."""
    return -4 * (2 * g - 1) * (g + 1)


def section4_report(g: int) -> dict:
    _check_genus(g)
    p = 2 * g - 2
    rho_len = len(build_rho(g))
    before = FibrationInvariants.closed(g, rho_len, sigma_rho(g))
    graph = linear_chain(p, 1)
    chi_after, sigma_after = blowdown_invariants(before.chi, before.sigma, graph)
    embed = embed_daisy(g)
    after = FibrationInvariants.closed(g, embed["length_rho_prime"], sigma_after)

    # rho I^4: the I^4 factor contributes 2 |I^2| letters; its signature is read off
    # from the stated homeomorphism type
    i4_len = 2 * len(build_I2(g))
    chi_i4 = 4 - 4 * g + rho_len + i4_len
    bp, bm = 4 * g * g + 1, 12 * g * g + 12 * g + 5
    sigma_i4 = bp - bm
    chi_i4_after, sigma_i4_after = blowdown_invariants(chi_i4, sigma_i4, graph)
    extra = 2 * g - 3  # blowups added back to the substituted manifold
    i4 = {
        "length": rho_len + i4_len, "chi": chi_i4, "sigma": sigma_i4,
        "chi_matches_stated_type": chi_i4 == 2 + bp + bm,
        "implied_sigma_I2": (sigma_i4 - sigma_rho(g)) // 2,
        "after": {"chi": chi_i4_after, "sigma": sigma_i4_after},
        "after_plus_blowups": {"chi": chi_i4_after + extra, "sigma": sigma_i4_after - extra},
        "types": homeo_type(chi_i4, sigma_i4),
    }
    i4["all_three_share_chi_sigma"] = (i4["after_plus_blowups"] == {"chi": chi_i4,
                                                                    "sigma": sigma_i4})
    checks = [
        _check("chi_from_word_length", before.chi == 4 * g * (4 * g - 1), "exact"),
        _check("chi_after_formula", chi_after == 16 * g * g - 6 * g + 3, "exact"),
        _check("sigma_after_formula", sigma_after == -8 * g * g - 2 * g + 1, "exact"),
        _check("chi_after_from_rho_prime", after.chi == chi_after, "exact"),
        _check("type_after", (after.b2plus, after.b2minus)
               == (4 * g * g - 4 * g + 1, 12 * g * g - 2 * g), "exact"),
        _check("type_before", (before.b2plus, before.b2minus)
               == (4 * g * g - 4 * g + 1, 12 * g * g - 3), "exact"),
        _check("length_drop_equals_vertices", rho_len - embed["length_rho_prime"] == len(graph),
               "exact"),
        _check("I4_variant_consistent", i4["chi_matches_stated_type"]
               and i4["all_three_share_chi_sigma"], "exact"),
    ]
    return {
        "g": g, "p": p,
        "lengths": {"rho": rho_len, "rho_prime": embed["length_rho_prime"]},
        "chi_before": before.chi, "sigma_before": before.sigma,
        "chi_after": chi_after, "sigma_after": sigma_after,
        "b2plus": after.b2plus, "b2minus": after.b2minus,
        "before": before.to_dict(), "after": after.to_dict(),
        "type_before": homeo_type(before.chi, before.sigma),
        "type_after": homeo_type(chi_after, sigma_after),
        "rho_I4": i4,
        "checks": checks,
        "all_passed": all(c["passed"] for c in checks),
    }
