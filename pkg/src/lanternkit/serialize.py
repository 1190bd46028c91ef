"""Relation JSON (schema version 1) with validation and exact round trips."""

import json

import jsonschema

from .planar import (Boundary, Certificate, Conjugated, HoledDisk, Hull, MonodromyWord, Outer,
                     Relation, TwistLetter, validate_curve)

SCHEMA_VERSION = 1

_CURVE = {
    "oneOf": [
        {"type": "object", "additionalProperties": False, "required": ["type", "hole"],
         "properties": {"type": {"const": "boundary"}, "hole": {"type": "integer", "minimum": 1}}},
        {"type": "object", "additionalProperties": False, "required": ["type"],
         "properties": {"type": {"const": "outer"}}},
        {"type": "object", "additionalProperties": False, "required": ["type", "holes", "routing"],
         "properties": {"type": {"const": "hull"},
                        "holes": {"type": "array", "minItems": 1, "uniqueItems": True,
                                  "items": {"type": "integer", "minimum": 1}},
                        "routing": {"enum": ["front", "back"]}}},
        {"type": "object", "additionalProperties": False,
         "required": ["type", "conjugator", "base"],
         "properties": {"type": {"const": "conjugated"},
                        "conjugator": {"$ref": "#/$defs/word"},
                        "base": {"$ref": "#/$defs/curve"}}},
    ]
}

RELATION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Relation",
    "type": "object",
    "required": ["schema", "surface", "lhs", "rhs", "certificate"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "surface": {
            "type": "object", "additionalProperties": False, "required": ["n", "labels"],
            "properties": {"n": {"type": "integer", "minimum": 1},
                           "labels": {"type": "array", "items": {"type": "string"}}},
        },
        "lhs": {"$ref": "#/$defs/word"},
        "rhs": {"$ref": "#/$defs/word"},
        "certificate": {
            "type": "object", "additionalProperties": False, "required": ["status"],
            "properties": {"status": {"enum": ["unverified", "verified", "refuted"]},
                           "diagnostic": {"type": ["object", "null"]}},
        },
        "metadata": {"type": "object"},
    },
    "$defs": {
        "curve": _CURVE,
        "word": {
            "type": "array",
            "items": {"type": "object", "additionalProperties": False,
                      "required": ["curve", "power"],
                      "properties": {"curve": {"$ref": "#/$defs/curve"},
                                     "power": {"type": "integer", "not": {"const": 0}}}},
        },
    },
}

CF_SCHEMA = {
    "type": "object",
    "required": ["p", "q", "coefficients", "moves", "c_sequence", "x_sequence"],
    "properties": {
        "p": {"type": "integer"}, "q": {"type": "integer"},
        "coefficients": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "moves": {"type": "array", "items": {
            "type": "object", "required": ["move", "count"],
            "properties": {"move": {"enum": ["a", "b"]}, "count": {"type": "integer"}}}},
        "c_sequence": {"type": "array", "items": {"type": "integer"}},
        "x_sequence": {"type": "array", "items": {"type": "integer"}},
        "theta_chain": {"type": "object"},
    },
}

FIBRATION_SCHEMA = {
    "type": "object",
    "required": ["genus", "length", "chi", "sigma", "b2plus", "b2minus"],
    "properties": {k: {"type": "integer"}
                   for k in ("genus", "length", "chi", "sigma", "b2plus", "b2minus")},
}

SECTION4_SCHEMA = {
    "type": "object",
    "required": ["g", "lengths", "chi_before", "sigma_before", "chi_after", "sigma_after",
                 "b2plus", "b2minus", "checks"],
    "properties": {
        "g": {"type": "integer"},
        "lengths": {"type": "object"},
        "before": FIBRATION_SCHEMA,
        "after": FIBRATION_SCHEMA,
        "checks": {"type": "array", "items": {
            "type": "object", "required": ["name", "passed", "kind"],
            "properties": {"name": {"type": "string"}, "passed": {"type": "boolean"},
                           "kind": {"enum": ["exact", "necessary", "relator-level"]}}}},
    },
}


class SchemaError(ValueError):
    pass


def curve_to_dict(c) -> dict:
    if isinstance(c, Boundary):
        return {"type": "boundary", "hole": c.hole}
    if isinstance(c, Outer):
        return {"type": "outer"}
    if isinstance(c, Hull):
        return {"type": "hull", "holes": sorted(c.holes), "routing": c.routing}
    if isinstance(c, Conjugated):
        return {"type": "conjugated", "conjugator": _letters_to_list(c.conjugator),
                "base": curve_to_dict(c.base)}
    raise TypeError(f"not a curve: {c!r}")


def curve_from_dict(d: dict):
    kind = d["type"]
    if kind == "boundary":
        return Boundary(d["hole"])
    if kind == "outer":
        return Outer()
    if kind == "hull":
        return Hull(frozenset(d["holes"]), d["routing"])
    if kind == "conjugated":
        return Conjugated(_letters_from_list(d["conjugator"]), curve_from_dict(d["base"]))
    raise SchemaError(f"unknown curve type {kind!r}")


def _letters_to_list(letters):
    return [{"curve": curve_to_dict(t.curve), "power": t.power} for t in letters]


def _letters_from_list(items):
    return tuple(TwistLetter(curve_from_dict(it["curve"]), it["power"]) for it in items)


def relation_to_dict(rel: Relation) -> dict:
    out = {
        "schema": SCHEMA_VERSION,
        "surface": {"n": rel.surface.n, "labels": list(rel.surface.labels)},
        "lhs": _letters_to_list(rel.lhs.letters),
        "rhs": _letters_to_list(rel.rhs.letters),
        "certificate": {"status": rel.certificate.status,
                        "diagnostic": rel.certificate.diagnostic},
    }
    if rel.metadata:
        out["metadata"] = json.loads(json.dumps(rel.metadata))
    return out


def validate(doc: dict, schema=RELATION_SCHEMA):
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        raise SchemaError(exc.message) from None


def relation_from_dict(doc: dict) -> Relation:
    validate(doc)
    surf = doc["surface"]
    if len(surf["labels"]) != surf["n"]:
        raise SchemaError("surface label count differs from n")
    try:
        surface = HoledDisk(tuple(surf["labels"]))
        lhs = MonodromyWord(surface, _letters_from_list(doc["lhs"]))
        rhs = MonodromyWord(surface, _letters_from_list(doc["rhs"]))
        for t in lhs.letters + rhs.letters:
            validate_curve(t.curve, surface)
    except (ValueError, TypeError) as exc:
        raise SchemaError(str(exc)) from None
    cert = doc["certificate"]
    return Relation(surface, lhs, rhs, Certificate(cert["status"], cert.get("diagnostic")),
                    dict(doc.get("metadata", {})))


def dumps(rel: Relation) -> str:
    return json.dumps(relation_to_dict(rel), sort_keys=True, indent=2)


def loads(text: str) -> Relation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not JSON: {exc}") from None
    return relation_from_dict(doc)
