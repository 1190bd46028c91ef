import pytest

from lanternkit import section4
from lanternkit.braids import BraidWord, burau_at_minus_one, is_plus_minus_identity
from lanternkit.serialize import SECTION4_SCHEMA, validate

GENERA = [2, 3, 4]


@pytest.mark.parametrize("g", GENERA)
def test_word_lengths(g):
    assert len(section4.build_CI(g)) == (2 * g + 1) * (2 * g + 2)
    assert len(section4.build_I2(g)) == 8 * g + 4
    assert len(section4.build_U(g)) == 8 * g + 2
    assert len(section4.build_rho(g)) == 16 * g * g - 4
    assert section4.build_Wbar(g).letters == section4.build_W(g).letters[::-1]


@pytest.mark.parametrize("g", GENERA)
def test_relators_pass_burau_screen(g):
    for word in (section4.build_CI(g), section4.build_I2(g), section4.build_rho(g)):
        assert is_plus_minus_identity(burau_at_minus_one(word))


@pytest.mark.parametrize("g", GENERA)
def test_verify_rho(g):
    out = section4.verify_rho(g)
    assert out["all_passed"], [c for c in out["checks"] if not c["passed"]]
    kinds = {c["name"]: c["kind"] for c in out["checks"]}
    assert kinds["rho_equals_gathered_relators"] == ("exact" if g == 2 else "relator-level")


def test_gathered_stage_is_relator_level_beyond_genus_two():
    # exact in the braid group at g = 2, not at g = 4
    stage = {g: next(c for c in section4.verify_rho(g)["checks"]
                     if c["name"] == "rho_equals_gathered_relators") for g in (2, 4)}
    assert stage[2]["passed"]
    assert not stage[4]["passed"]


@pytest.mark.parametrize("g", [2, 3])
def test_single_letter_mutation_fails_screen(g):
    rho = section4.build_rho(g)
    n = 2 * g + 1
    for pos in range(0, len(rho), 7):
        letters = list(rho.letters)
        letters[pos] = letters[pos] % n + 1
        mutated = BraidWord(rho.strands, tuple(letters))
        assert not is_plus_minus_identity(burau_at_minus_one(mutated)), pos


@pytest.mark.parametrize("g", GENERA)
def test_report(g):
    r = section4.section4_report(g)
    assert r["all_passed"], [c for c in r["checks"] if not c["passed"]]
    assert r["chi_before"] == 4 * g * (4 * g - 1)
    assert r["sigma_before"] == -4 * (2 * g - 1) * (g + 1)
    assert r["chi_after"] == 16 * g * g - 6 * g + 3
    assert r["sigma_after"] == -8 * g * g - 2 * g + 1
    assert (r["b2plus"], r["b2minus"]) == (4 * g * g - 4 * g + 1, 12 * g * g - 2 * g)
    assert r["rho_I4"]["implied_sigma_I2"] == -4 * (g + 1)
    validate(r, SECTION4_SCHEMA)


def test_report_values_genus_two():
    r = section4.section4_report(2)
    assert (r["chi_before"], r["sigma_before"]) == (56, -36)
    assert (r["chi_after"], r["sigma_after"]) == (55, -35)
    assert (r["b2plus"], r["b2minus"]) == (9, 44)


@pytest.mark.parametrize("g", GENERA)
def test_embedding(g):
    e = section4.embed_daisy(g)
    assert e["p"] == 2 * g - 2
    assert e["mapping"]["a0"] == "c1"
    assert e["length_rho"] - e["length_rho_prime"] == e["p"] - 1
    assert sum(tok.startswith("f(") for tok in e["rho_prime"]) == e["p"] + 1
    # c1 is hit by the center and by petals 1 and p + 2
    assert sorted(e["preimages"]["c1"]) == sorted(["a0", "a1", f"a{e['p'] + 2}"])


def test_genus_validation():
    with pytest.raises(ValueError):
        section4.build_rho(1)
    with pytest.raises(ValueError):
        section4.section4_report(0)
