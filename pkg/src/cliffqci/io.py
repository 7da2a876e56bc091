"""JSON formats: rationals are "p/q" strings, quadratic-extension scalars are {"a", "b", "d"}."""

import jsonschema

from .algebra.scalars import QuadScalar, scalar_from_json, scalar_to_json
from .clifford.seq import SymMatrixSeq
from .quadratic import QuadraticPresentation

RATIONAL = {"oneOf": [
    {"type": "integer"},
    {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*[1-9]\d*)?\s*$"},
]}
EXT = {"type": "object", "required": ["a", "b", "d"], "additionalProperties": False,
       "properties": {"a": RATIONAL, "b": RATIONAL, "d": RATIONAL}}
SCALAR = {"oneOf": [RATIONAL, EXT]}
MATRIX = {"type": "array", "minItems": 1, "items": {"type": "array", "minItems": 1, "items": RATIONAL}}
VECTOR = {"type": "array", "minItems": 1, "items": SCALAR}

PRESENTATION = {
    "type": "object",
    "required": ["n", "relations"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "commutative": {"type": "boolean"},
        "relations": {"type": "array", "items": MATRIX},
    },
}

INPUT = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "F": {"type": "array", "minItems": 1, "items": MATRIX},
        "abc": {"type": "array", "minItems": 3, "maxItems": 3, "items": RATIONAL},
        "presentation": PRESENTATION,
        "quotient": {"type": "array", "items": {
            "type": "object", "additionalProperties": False,
            "minProperties": 1, "maxProperties": 1,
            "properties": {"linear": VECTOR, "square": {"type": "array", "items": RATIONAL}},
        }},
        "D": {"type": "integer", "minimum": 0},
        "s": {"type": "integer", "minimum": 1},
        "mode": {"enum": ["rational", "ext"]},
        "points": {"type": "array", "items": VECTOR},
        "pencil": {"type": "array", "minItems": 2, "maxItems": 2, "items": MATRIX},
        "rows": {"type": "array"},
    },
}


class SchemaError(ValueError):
    """Input JSON does not match the expected layout."""

    def __init__(self, message, location=""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


def validate(obj, schema=INPUT):
    try:
        jsonschema.validate(obj, schema)
    except jsonschema.ValidationError as exc:
        loc = "/" + "/".join(str(p) for p in exc.absolute_path)
        raise SchemaError(exc.message, loc) from None
    return obj


def parse_scalar(x, mode="rational", where=""):
    v = scalar_from_json(x)
    if isinstance(v, QuadScalar) and mode != "ext":
        raise SchemaError("quadratic-extension scalar needs mode \"ext\"", where)
    return v


def seq_from_json(F, n=None):
    try:
        seq = SymMatrixSeq(F)
    except ValueError as exc:
        raise SchemaError(str(exc), "/F") from None
    if n is not None and seq.n != n:
        raise SchemaError(f"matrices are {seq.n} x {seq.n} but n = {n}", "/F")
    return seq


def seq_to_json(F):
    return F.to_json()


def presentation_from_json(obj):
    validate(obj, PRESENTATION)
    try:
        return QuadraticPresentation(obj["n"], obj["relations"], obj.get("commutative"))
    except ValueError as exc:
        raise SchemaError(str(exc), "/relations") from None


def presentation_to_json(P):
    return {
        "n": P.n,
        "commutative": P.commutative,
        "relations": [[[str(x) for x in row] for row in M] for M in P.relations],
    }


def matrix_to_json(M):
    return [[scalar_to_json(x) for x in row] for row in M]


def vector_to_json(v):
    return [scalar_to_json(x) for x in v]


def poly_to_json(p, names=None):
    return p.format(names)
