import json

import pytest

from lanternkit import families
from lanternkit.planar import (Boundary, Conjugated, HoledDisk, Hull, Outer, Relation,
                               TwistLetter, verify_relation)
from lanternkit.serialize import (CF_SCHEMA, SchemaError, curve_from_dict, curve_to_dict, dumps,
                                  loads, validate)
from lanternkit.contfrac import cf_expand


@pytest.mark.parametrize("rel", [families.lantern(), families.daisy(4), families.w_family(1, 0, 1),
                                 families.n_family(0, 1, 0), families.linear_family(7, 3)],
                         ids=["lantern", "daisy4", "w101", "n010", "lin73"])
def test_round_trip_bit_exact(rel):
    text = dumps(rel)
    back = loads(text)
    assert back == rel
    assert back.metadata == json.loads(json.dumps(rel.metadata))
    assert dumps(back) == text
    assert verify_relation(back).verified


def test_curve_round_trip():
    curves = [Boundary(2), Outer(), Hull(frozenset({1, 3}), "front"),
              Conjugated((TwistLetter(Hull(frozenset({1, 2})), -2),), Boundary(3))]
    for c in curves:
        assert curve_from_dict(json.loads(json.dumps(curve_to_dict(c)))) == c


def test_empty_relation():
    rel = verify_relation(Relation.of(HoledDisk.standard(2), [], []))
    back = loads(dumps(rel))
    assert back.verified and len(back.lhs) == 0


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("lhs"),
    lambda d: d.update(schema=2),
    lambda d: d["lhs"][0].update(power=0),
    lambda d: d["lhs"][0]["curve"].update(type="circle"),
    lambda d: d["surface"].update(n=7),
    lambda d: d["lhs"][0].update(curve={"type": "boundary", "hole": 9}),
    lambda d: d["certificate"].update(status="maybe"),
    lambda d: d.update(extra=1),
])
def test_schema_rejects(mutate):
    doc = json.loads(dumps(families.lantern()))
    mutate(doc)
    with pytest.raises(SchemaError):
        loads(json.dumps(doc))


def test_not_json():
    with pytest.raises(SchemaError):
        loads("{not json")


def test_cf_schema():
    validate(cf_expand(17, 7).to_dict(), CF_SCHEMA)
