"""JSON loading with schema validation.

Structural problems raise :class:`SchemaError`; mathematically invalid but
well-formed input raises a :class:`ValidationError` subclass from the
constructors themselves.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path

import jsonschema

from .errors import SchemaError
from .shift import EvPeriodicPoint, ShiftSpace, normalize_evp, validate_matrix

_MATRIX = {
    "oneOf": [
        {
            "type": "object",
            "required": ["rows"],
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "rows": {"type": "array", "minItems": 1, "items": {"type": "array", "items": {"type": "integer"}}},
            },
        },
        {"type": "array", "minItems": 1, "items": {"type": "array", "items": {"type": "integer"}}},
    ]
}

_WORD = {"type": "array", "items": {"type": "integer", "minimum": 1}}

_CYLFN = {
    "type": "object",
    "required": ["depth", "table"],
    "properties": {
        "depth": {"type": "integer", "minimum": 0},
        "table": {
            "oneOf": [
                {"type": "object", "additionalProperties": {"type": "integer"}},
                {
                    "type": "array",
                    "items": {"type": "array", "minItems": 2, "maxItems": 2,
                              "prefixItems": [_WORD, {"type": "integer"}]},
                },
            ]
        },
    },
}

_TRANSDUCER = {
    "type": "object",
    "required": ["states", "initial", "rules"],
    "properties": {
        "states": {"type": "array", "minItems": 1, "items": {"type": "string"}},
        "initial": {"type": "string"},
        "rules": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["state", "input", "output", "next"],
                "properties": {
                    "state": {"type": "string"},
                    "input": {"type": "integer", "minimum": 1},
                    "output": _WORD,
                    "next": {"type": "string"},
                },
            },
        },
    },
}

SPEC_SCHEMA = {
    "type": "object",
    "required": ["A", "B", "h", "hinv", "k1", "l1", "k2", "l2"],
    "properties": {
        "A": _MATRIX,
        "B": _MATRIX,
        "h": _TRANSDUCER,
        "hinv": _TRANSDUCER,
        "k1": _CYLFN,
        "l1": _CYLFN,
        "k2": _CYLFN,
        "l2": _CYLFN,
    },
}

_RATIONAL = {"oneOf": [{"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}, {"type": "integer"}]}

MEASURE_SCHEMA = {
    "type": "object",
    "required": ["P"],
    "properties": {
        "P": {"type": "array", "minItems": 1, "items": {"type": "array", "items": _RATIONAL}},
        "pi": {"type": "array", "items": _RATIONAL},
    },
}

MATRIX_SCHEMA = _MATRIX
CYLFN_SCHEMA = _CYLFN
POINT_SCHEMA = {"type": "object", "required": ["cycle"], "properties": {"transient": _WORD, "cycle": _WORD}}


def check_schema(data, schema, what: str = "input"):
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        loc = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"{what}: {exc.message} at {loc}") from None


def read_json(path):
    """``(data, sha256 hex digest of the raw bytes)``."""
    raw = Path(path).read_bytes()
    try:
        data = json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from None
    return data, hashlib.sha256(raw).hexdigest()


def load_space(data) -> ShiftSpace:
    check_schema(data, MATRIX_SCHEMA, "matrix")
    rows = data["rows"] if isinstance(data, dict) else data
    if isinstance(data, dict) and "n" in data and data["n"] != len(rows):
        raise SchemaError(f"matrix: n = {data['n']} but {len(rows)} rows given")
    return validate_matrix(rows)


def load_cylfn(space: ShiftSpace, data):
    from .cylfn import cylfn_from_json

    check_schema(data, CYLFN_SCHEMA, "cylinder function")
    try:
        return cylfn_from_json(space, data)
    except (ValueError, KeyError) as exc:
        raise SchemaError(f"cylinder function: {exc}") from None


def load_point(space: ShiftSpace, data) -> EvPeriodicPoint:
    check_schema(data, POINT_SCHEMA, "point")
    return normalize_evp(space, data.get("transient", []), data["cycle"])


def load_spec(data):
    from .coe import CoeSpec, transducer_from_json

    check_schema(data, SPEC_SCHEMA, "spec")
    A = load_space(data["A"])
    B = load_space(data["B"])
    h = transducer_from_json(A, B, data["h"])
    hinv = transducer_from_json(B, A, data["hinv"])
    return CoeSpec(A, B, h, hinv, load_cylfn(A, data["k1"]), load_cylfn(A, data["l1"]),
                   load_cylfn(B, data["k2"]), load_cylfn(B, data["l2"]))


def parse_rational(v) -> Fraction:
    return Fraction(v.replace(" ", "")) if isinstance(v, str) else Fraction(v)


def load_measure(space: ShiftSpace, data):
    from .measures import markov_measure

    check_schema(data, MEASURE_SCHEMA, "measure")
    P = [[parse_rational(v) for v in row] for row in data["P"]]
    pi = [parse_rational(v) for v in data["pi"]] if "pi" in data else None
    return markov_measure(space, P, pi)


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
