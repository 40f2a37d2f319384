"""
JSON schema validation for command reports.
"""

import logging
from typing import List, Tuple

import jsonschema

logger = logging.getLogger(__name__)

_STRINGS = {"type": "array", "items": {"type": "string"}}
_MATRICES = {
    "type": "array",
    "items": {
        "type": "array",
        "minItems": 1,
        "items": {"type": "array", "items": {"type": "integer", "enum": [0, 1]}},
    },
}
_CERTIFICATE = {"oneOf": [_STRINGS, {"type": "null"}]}

# Result payload per command. Commands not listed only need an object.
RESULT_SCHEMAS = {
    "validate": {
        "type": "object",
        "properties": {"components": {"type": "integer", "minimum": 1}, "rank": {"type": "integer", "minimum": 0}},
        "required": ["components", "rank"],
    },
    "canon": {
        "type": "object",
        "properties": {"canonical": {"type": "string"}},
        "required": ["canonical"],
    },
    "moves": {
        "type": "object",
        "properties": {
            "moves": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {"move": {"type": "string"}, "result": {"type": "string"}},
                    "required": ["move", "result"],
                },
            },
        },
        "required": ["moves"],
    },
    "apply": {
        "type": "object",
        "properties": {"result": {"type": "string"}, "moves": _STRINGS},
        "required": ["result", "moves"],
    },
    "s": {
        "type": "object",
        "properties": {"matrices": _MATRICES, "encoding": {"type": "string"}},
        "required": ["matrices", "encoding"],
    },
    "sm": {
        "type": "object",
        "properties": {"matrices": _MATRICES, "encoding": {"type": "string"}},
        "required": ["matrices", "encoding"],
    },
    "z": {
        "type": "object",
        "properties": {
            "word": {"type": "string"},
            "z_keys": _STRINGS,
            "nonzero": {"type": "boolean"},
            "letter_keys": {"type": "object", "additionalProperties": {"type": "string"}},
            "trivial_key": {"type": "string"},
        },
        "required": ["word", "z_keys", "nonzero"],
    },
    "parity": {
        "type": "object",
        "properties": {
            "parity": {"type": "object", "additionalProperties": {"enum": ["even", "odd"]}},
            "odd": _STRINGS,
        },
        "required": ["parity", "odd"],
    },
    "cover": {
        "type": "object",
        "properties": {"cover": {"type": "string"}, "tower": _STRINGS},
        "required": ["cover"],
    },
    "lift": {
        "type": "object",
        "properties": {"lift": {"type": "string"}, "rank": {"type": "integer"}},
        "required": ["lift", "rank"],
    },
    "height": {
        "type": "object",
        "properties": {
            "syntactic_height": {"type": "integer", "minimum": 0},
            "base": {"type": "string"},
            "lower": {"type": "integer", "minimum": 0},
            "upper": {"type": "integer", "minimum": 0},
            "exact": {"type": "boolean"},
        },
        "required": ["syntactic_height", "base", "lower", "upper", "exact"],
    },
    "search": {
        "type": "object",
        "properties": {
            "verdict": {"enum": ["equivalent", "not-equivalent-within-bounds", "resource-exhausted"]},
            "certificate": _CERTIFICATE,
            "explored": {"type": "integer", "minimum": 0},
            "rank_cap": {"type": "integer", "minimum": 0},
        },
        "required": ["verdict", "certificate", "explored", "rank_cap"],
    },
    "reduce": {
        "type": "object",
        "properties": {
            "reduced": {"type": "string"},
            "rank": {"type": "integer", "minimum": 0},
            "certificate": _CERTIFICATE,
            "complete": {"type": "boolean"},
        },
        "required": ["reduced", "rank", "complete"],
    },
    "classes": {
        "type": "object",
        "properties": {
            "groups": {"type": "array", "items": _STRINGS},
            "complete": {"type": "boolean"},
        },
        "required": ["groups", "complete"],
    },
    "paper-selftest": {
        "type": "object",
        "properties": {
            "seed": {"type": "integer"},
            "passed": {"type": "integer", "minimum": 0},
            "failed": {"type": "integer", "minimum": 0},
            "cases": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "name": {"type": "string"},
                        "passed": {"type": "boolean"},
                        "detail": {"type": "string"},
                    },
                    "required": ["name", "passed"],
                },
            },
        },
        "required": ["seed", "passed", "failed", "cases"],
    },
}
RESULT_SCHEMAS["zo"] = RESULT_SCHEMAS["z"]

# Envelope shared by every report.
REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "command": {"type": "string", "minLength": 1},
        "input": {"type": ["string", "null"]},
        "canonical": {"type": ["string", "null"]},
        "result": {"type": "object"},
        "notes": _STRINGS,
        "nontrivial": {"type": "boolean"},
    },
    "required": ["command", "input", "canonical", "result", "notes", "nontrivial"],
}

# Batch lines that failed carry an error message instead of a result.
ERROR_RECORD_SCHEMA = {
    "type": "object",
    "properties": {
        "line": {"type": "integer", "minimum": 1},
        "input": {"type": "string"},
        "error": {"type": "string", "minLength": 1},
    },
    "required": ["line", "input", "error"],
}


def _format_errors(validator: jsonschema.Draft7Validator, data: dict) -> List[str]:
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.path))
    messages = []
    for err in errors:
        path = " -> ".join(str(p) for p in err.absolute_path) if err.absolute_path else "(root)"
        messages.append(f"[{path}] {err.message}")
    return messages


def validate_report(report: dict) -> Tuple[bool, List[str]]:
    """Validate a report dict: the envelope, then the command's result payload.

    Returns:
        (is_valid, list_of_error_messages)
    """
    messages = _format_errors(jsonschema.Draft7Validator(REPORT_SCHEMA), report)
    if messages:
        return False, messages
    schema = RESULT_SCHEMAS.get(report["command"])
    if schema is not None:
        messages = [f"result {m}" for m in _format_errors(jsonschema.Draft7Validator(schema), report["result"])]
    return not messages, messages


def validate_error_record(record: dict) -> Tuple[bool, List[str]]:
    messages = _format_errors(jsonschema.Draft7Validator(ERROR_RECORD_SCHEMA), record)
    return not messages, messages
