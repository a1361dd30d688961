"""JSON schemas for every document the CLI emits or reads."""

import jsonschema

PERM = {"type": "string", "pattern": r"^[1-9][0-9]*(,[1-9][0-9]*)*$"}
FRACTION = {"type": "string", "pattern": r"^-?[0-9]+(/[1-9][0-9]*)?$"}

MATRIX = {
    "type": "object",
    "required": ["rows", "cols", "entries"],
    "properties": {
        "rows": {"type": "integer", "minimum": 0},
        "cols": {"type": "integer", "minimum": 0},
        "entries": {"type": "array", "items": {"type": "array", "items": FRACTION}},
    },
}

MOMENT_GRAPH = {
    "type": "object",
    "required": ["n", "h", "operator", "vertices", "edges"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "h": PERM,
        "operator": {"enum": ["semisimple", "nilpotent", "full"]},
        "vertices": {"type": "array", "items": PERM},
        "edges": {"type": "array", "items": {
            "type": "object",
            "required": ["w", "s", "label", "closure_contained"],
            "additionalProperties": False,
            "properties": {
                "w": PERM,
                "s": {"type": "array", "items": {"type": "integer", "minimum": 1},
                      "minItems": 2, "maxItems": 2},
                "label": {"type": "string", "pattern": r"^t[0-9]+-t[0-9]+$"},
                "closure_contained": {"type": "boolean"},
            },
        }},
    },
}

FIXED_POINTS = {
    "type": "object",
    "required": ["n", "h", "operator", "fixed_points"],
    "properties": {
        "n": {"type": "integer"},
        "h": PERM,
        "operator": {"type": "string"},
        "fixed_points": {"type": "array", "items": PERM},
        "trace": {"type": "object"},
    },
}

MEMBERSHIP = {
    "type": "object",
    "required": ["n", "h", "operator", "verdicts", "agree", "member"],
    "properties": {
        "n": {"type": "integer"},
        "h": PERM,
        "operator": {"type": "string"},
        "flag": MATRIX,
        "verdicts": {"type": "object",
                     "required": ["rank", "minors_full", "minors_all", "adjoint"],
                     "additionalProperties": {"type": "boolean"}},
        "agree": {"type": "boolean"},
        "member": {"type": ["boolean", "null"]},
    },
}

IDEAL = {
    "type": "object",
    "required": ["kind", "n", "generators"],
    "properties": {
        "kind": {"enum": ["gtilde", "g", "en"]},
        "n": {"type": "integer"},
        "h": {"type": ["string", "null"]},
        "generators": {"type": "array", "items": {
            "type": "object",
            "required": ["index", "factored", "expanded"],
            "properties": {"index": {"type": "integer"},
                           "factored": {"type": "string"},
                           "expanded": {"type": "string"}},
        }},
    },
}

LOCALIZATION_ENTRY = {
    "type": "object",
    "required": ["w", "h", "mode", "coeff", "fixed", "factors", "product"],
    "properties": {
        "w": PERM, "h": PERM,
        "mode": {"enum": ["insko-4.14", "cor-4.6"]},
        "coeff": {"enum": ["as-written", "i-shift"]},
        "fixed": {"type": "boolean"},
        "factors": {"type": "array", "items": {
            "type": "object", "required": ["i", "j", "factor"],
            "properties": {"i": {"type": "integer"}, "j": {"type": "integer"},
                           "factor": {"type": "string"}}}},
        "product": {"type": "string"},
    },
}

LOCALIZATION = {"type": "array", "items": LOCALIZATION_ENTRY}

RELATION_REPORT = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["w", "generator_index", "lhs", "rhs", "match"],
        "additionalProperties": False,
        "properties": {
            "w": PERM,
            "generator_index": {"type": "integer", "minimum": 1},
            "lhs": {"type": "string"},
            "rhs": {"type": "string"},
            "match": {"type": "boolean"},
        },
    },
}

LINE_CHECK = {
    "type": "object",
    "required": ["n", "h", "rows", "vanishing_set", "ideal_fixed_points", "sets_equal"],
    "properties": {
        "n": {"type": "integer"},
        "h": PERM,
        "rows": {"type": "array", "items": {
            "type": "object",
            "required": ["w", "family", "generator_index", "vanishes"],
            "additionalProperties": False,
            "properties": {"w": PERM, "family": {"enum": ["en", "g"]},
                           "generator_index": {"type": "integer"},
                           "vanishes": {"type": "boolean"}},
        }},
        "vanishing_set": {"type": "array", "items": PERM},
        "ideal_fixed_points": {"type": "array", "items": PERM},
        "sets_equal": {"type": "boolean"},
    },
}

VERIFICATION_REPORT = {
    "type": "object",
    "required": ["scope", "checks", "diagnostics", "passed"],
    "properties": {
        "scope": {"type": "object",
                  "required": ["max_n", "seed", "samples", "all_h", "operators"]},
        "checks": {"type": "array", "items": {
            "type": "object",
            "required": ["name", "cases_run", "failure_count", "failures"],
            "properties": {
                "name": {"type": "string"},
                "cases_run": {"type": "integer", "minimum": 0},
                "failure_count": {"type": "integer", "minimum": 0},
                "failures": {"type": "array", "items": {"type": "object"}},
                "elapsed": {"type": "number"},
            },
        }},
        "diagnostics": {"type": "array", "items": {
            "type": "object", "required": ["name", "cases_run"]}},
        "passed": {"type": "boolean"},
    },
}

SCHEMAS = {
    "matrix": MATRIX,
    "moment-graph": MOMENT_GRAPH,
    "fixed-points": FIXED_POINTS,
    "membership": MEMBERSHIP,
    "ideal": IDEAL,
    "localize": LOCALIZATION,
    "relation-report": RELATION_REPORT,
    "line-check": LINE_CHECK,
    "verify": VERIFICATION_REPORT,
}


def validate(doc, name: str) -> None:
    """Raise jsonschema.ValidationError unless ``doc`` matches schema ``name``."""
    jsonschema.validate(doc, SCHEMAS[name])
