import itertools
from math import gcd

import pytest

from lanternkit import families, topology
from lanternkit.conventions import PINNED, SEARCH_SPACE
from lanternkit.planar import MonodromyWord, Relation, TwistLetter, verify_relation

TRIPLES_1 = list(itertools.product(range(2), repeat=3))


def test_lantern():
    rel = families.lantern()
    assert rel.verified and rel.surface.n == 3
    assert len(rel.lhs) == 4 and len(rel.rhs) == 3
    assert families.properties_check(rel)["holds"]


@pytest.mark.parametrize("p", range(2, 8))
def test_daisy(p):
    rel = families.daisy(p)
    assert rel.verified
    assert len(rel.lhs) == 2 * p and len(rel.rhs) == p + 1
    assert len(rel.lhs) - len(rel.rhs) == len(topology.linear_chain(p, 1))
    props = families.properties_check(rel)
    assert props["holds"], props


def test_daisy_rejects_small_p():
    with pytest.raises(ValueError):
        families.daisy(1)
    with pytest.raises(ValueError):
        families.w_family(-1, 0, 0)


@pytest.mark.parametrize("p, q, r", TRIPLES_1 + [(2, 1, 0), (0, 2, 1), (2, 2, 2)])
def test_w_family(p, q, r):
    rel = families.w_family(p, q, r)
    assert rel.verified
    assert rel.surface.n == p + q + r + 6
    assert len(rel.lhs) - len(rel.rhs) == p + q + r + 4
    assert families.properties_check(rel)["holds"]


@pytest.mark.parametrize("p, q, r", TRIPLES_1 + [(2, 1, 0), (0, 2, 1), (2, 2, 2)])
def test_n_family(p, q, r):
    rel = families.n_family(p, q, r)
    assert rel.verified
    assert rel.surface.n == p + q + r + 6
    assert len(rel.lhs) - len(rel.rhs) == p + q + r + 4
    assert families.properties_check(rel)["holds"]


def test_metadata_records_convention():
    rel = families.w_family(0, 0, 0)
    assert rel.metadata["family"] == "wfam"
    assert rel.metadata["convention"] == PINNED["wfam"]._asdict()
    assert len(SEARCH_SPACE) == 4


@pytest.mark.parametrize("p, q", [(p, q) for p in range(2, 14) for q in range(2, p)
                                  if gcd(p, q) == 1][:25] + [(17, 7)])
def test_linear_family(p, q):
    rel = families.linear_family(p, q)
    e = rel.metadata["cf"]
    k = len(e["coefficients"])
    assert rel.verified
    assert rel.surface.n == k + 2
    assert len(rel.lhs) - len(rel.rhs) == k
    assert families.properties_check(rel)["holds"]
    assert set(rel.metadata["split_choices"]) <= {"default", "fallback"}


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_linear_q1_matches_daisy(p):
    built = families.linear_family(p, 1, delegate=False)
    assert built.verified
    # for p = 2 the chain is a single (-4)-sphere and the relation is the lantern
    reference = families.daisy(p) if p > 2 else families.lantern()
    assert families.relations_isomorphic(built, reference)
    delegated = families.linear_family(p, 1)
    assert delegated.metadata.get("delegated_to") == "daisy"


def test_isomorphism_negative():
    a, b = families.daisy(3), families.linear_family(5, 2)
    assert not families.relations_isomorphic(a, b)
    rel = families.daisy(3)
    rotated = Relation(rel.surface, rel.lhs,
                       MonodromyWord(rel.surface, rel.rhs.letters[1:] + rel.rhs.letters[:1]))
    assert families.relations_isomorphic(rel, rotated)
    assert verify_relation(rotated).verified  # a cyclic shift of a relator stays a relator


def test_properties_detect_negative_power():
    rel = families.lantern()
    bad = Relation(rel.surface, rel.lhs,
                   MonodromyWord(rel.surface, (TwistLetter(rel.rhs.letters[0].curve, -1),)
                                 + rel.rhs.letters[1:]))
    assert not families.properties_check(bad)["holds"]


@pytest.mark.parametrize("family, params, graph", [
    ("wfam", (1, 0, 2), topology.gamma_w),
    ("nfam", (2, 1, 0), topology.delta_n),
    ("nfam", (0, 1, 1), topology.delta_n),
])
def test_family_vertex_count(family, params, graph):
    ctor = {"wfam": families.w_family, "nfam": families.n_family}[family]
    rel = ctor(*params)
    g = graph(*params)
    assert len(rel.lhs) - len(rel.rhs) == len(g)
