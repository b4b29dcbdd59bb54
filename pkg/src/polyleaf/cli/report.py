"""JSON report construction and its schema."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

from polyleaf.algebra import GaussianRational, Polynomial, UnivariatePoly
from polyleaf.decompose import DecompositionResult
from polyleaf.leaves import GrowthTable, LevelSpread
from polyleaf.power import CnPStatus, PowerReport, SeriesCertificate, cpoly_text


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    result: dict[str, Any] | None = None
    diagnostics: list[str] = field(default_factory=list)
    seed: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "diagnostics": self.diagnostics,
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(_sanitize(self.to_dict()), indent=2, allow_nan=False) + "\n"


def _sanitize(obj):
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    return obj


# -- payload encoders ---------------------------------------------------------

def exact(c: GaussianRational) -> dict[str, str]:
    return c.to_json()


def cfloat(z: complex) -> dict[str, float]:
    z = complex(z)
    return {"re": float(z.real), "im": float(z.imag)}


def upoly_payload(h: UnivariatePoly) -> dict[str, Any]:
    return {"text": h.to_text("X"), "coeffs": [exact(c) for c in h.coeffs]}


def power_payload(rep: PowerReport, hypothesis: bool) -> dict[str, Any]:
    dec = rep.decomposition
    return {
        "rho": rep.rho_text,
        "vanishing_exponents": list(rep.vanishing_exponents),
        "unit": exact(dec.unit) if dec is not None else None,
        "factors": [] if dec is None else [{"factor": g.to_text(), "exponent": e} for g, e in dec.factors],
        "is_theorem_hypothesis": hypothesis,
    }


def certificate_payload(cert: SeriesCertificate) -> dict[str, Any]:
    terms = sorted(cert.root.items(), key=lambda t: (t[0][0] + t[0][1], -t[0][0]))
    return {
        "m": cert.m,
        "truncation_order": cert.truncation_order,
        "residual": cert.residual,
        "root": [{"e1": e[0], "e2": e[1], **cfloat(c)} for e, c in terms],
    }


def cnp_payload(status: CnPStatus, n: int) -> dict[str, Any]:
    return {
        "verdict": status.verdict,
        "n": n,
        "rho": status.report.rho_text if status.report is not None else None,
        "witness": None if status.witness is None else [cpoly_text(w) for w in status.witness],
        "searched_degree_bound": status.searched_degree_bound,
    }


def decomposition_payload(res: DecompositionResult) -> dict[str, Any]:
    return {
        "outcome": res.outcome,
        "h": None if res.h is None else upoly_payload(res.h),
        "reason": res.reason,
        "remainder": None if res.remainder is None else res.remainder.to_text(),
    }


def spreads_payload(spreads) -> list[dict[str, Any]]:
    out = []
    for s in spreads:
        s: LevelSpread
        out.append({
            "level": cfloat(s.level),
            "relative_spread": s.relative_spread,
            "points": s.points,
            "failure": s.failure,
        })
    return out


def growth_payload(g: GrowthTable | None) -> dict[str, Any] | None:
    if g is None:
        return None
    return {
        "radii": list(g.radii),
        "max_abs_f": list(g.max_abs_f),
        "overflowed": g.overflowed,
        "grows": g.grows(),
    }


def error_payload(kind: str, message: str, span=None) -> dict[str, Any]:
    return {"error": {"kind": kind, "message": message, "span": None if span is None else list(span)}}


def canonical(p: Polynomial) -> str:
    return p.to_text()


# -- schema ---------------------------------------------------------------------

_EXACT = {
    "type": "object",
    "properties": {"re": {"type": "string"}, "im": {"type": "string"}},
    "required": ["re", "im"],
    "additionalProperties": False,
}
_CFLOAT = {
    "type": "object",
    "properties": {"re": {"type": "number"}, "im": {"type": "number"}},
    "required": ["re", "im"],
    "additionalProperties": False,
}
_NUM_OR_NULL = {"type": ["number", "null"]}
_UPOLY = {
    "type": "object",
    "properties": {"text": {"type": "string"}, "coeffs": {"type": "array", "items": _EXACT}},
    "required": ["text", "coeffs"],
}
_DECOMP = {
    "type": "object",
    "properties": {
        "outcome": {"enum": ["Found", "NotDecomposable"]},
        "h": {"oneOf": [_UPOLY, {"type": "null"}]},
        "reason": {"enum": [None, "DegreeMismatch", "LeadingFormMismatch", "ResidualNonzero"]},
        "remainder": {"type": ["string", "null"]},
    },
    "required": ["outcome", "h", "reason"],
}
_SPREADS = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "level": _CFLOAT,
            "relative_spread": _NUM_OR_NULL,
            "points": {"type": "integer"},
            "failure": {"type": ["string", "null"]},
        },
        "required": ["level", "relative_spread", "points", "failure"],
    },
}
_GROWTH = {
    "type": "object",
    "properties": {
        "radii": {"type": "array", "items": {"type": "number"}},
        "max_abs_f": {"type": "array", "items": _NUM_OR_NULL},
        "overflowed": {"type": "boolean"},
        "grows": {"type": "boolean"},
    },
    "required": ["radii", "max_abs_f", "overflowed", "grows"],
}
_ERROR = {
    "type": "object",
    "properties": {
        "error": {
            "type": "object",
            "properties": {
                "kind": {"type": "string"},
                "message": {"type": "string"},
                "span": {
                    "oneOf": [
                        {"type": "null"},
                        {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                    ]
                },
            },
            "required": ["kind", "message", "span"],
        }
    },
    "required": ["error"],
    "additionalProperties": False,
}

RESULT_SCHEMAS: dict[str, dict] = {
    "ispower": {
        "type": "object",
        "properties": {
            "rho": {"type": "string", "pattern": "^([1-9][0-9]*|infinite)$"},
            "vanishing_exponents": {"type": "array", "items": {"type": "integer", "minimum": 1}},
            "unit": {"oneOf": [_EXACT, {"type": "null"}]},
            "factors": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {"factor": {"type": "string"}, "exponent": {"type": "integer", "minimum": 1}},
                    "required": ["factor", "exponent"],
                },
            },
            "is_theorem_hypothesis": {"type": "boolean"},
        },
        "required": ["rho", "vanishing_exponents", "unit", "factors", "is_theorem_hypothesis"],
    },
    "certificate": {
        "type": "object",
        "properties": {
            "m": {"type": "integer", "minimum": 2},
            "truncation_order": {"type": "integer"},
            "residual": {"type": "number", "minimum": 0},
            "root": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "e1": {"type": "integer"},
                        "e2": {"type": "integer"},
                        "re": {"type": "number"},
                        "im": {"type": "number"},
                    },
                    "required": ["e1", "e2", "re", "im"],
                },
            },
        },
        "required": ["m", "truncation_order", "residual", "root"],
    },
    "irreducible": {
        "type": "object",
        "properties": {
            "verdict": {"enum": ["IrreducibleCertified", "Reducible", "Unknown"]},
            "n": {"type": "integer", "minimum": 1},
            "rho": {"type": ["string", "null"]},
            "witness": {
                "oneOf": [{"type": "null"}, {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2}]
            },
            "searched_degree_bound": {"type": ["integer", "null"]},
        },
        "required": ["verdict", "n", "witness", "searched_degree_bound"],
    },
    "decompose": _DECOMP,
    "leaves": {
        "type": "object",
        "properties": {
            "spread_tol": {"type": "number"},
            "all_within_tol": {"type": "boolean"},
            "levels": _SPREADS,
        },
        "required": ["spread_tol", "all_within_tol", "levels"],
    },
    "growth": {
        "allOf": [_GROWTH, {"type": "object", "properties": {"level": _CFLOAT}, "required": ["level"]}]
    },
    "theorem": {
        "type": "object",
        "properties": {
            "consistent": {"type": "boolean"},
            "constant_on_leaves": {"type": "boolean"},
            "refuted": {"type": "boolean"},
            "exact": _DECOMP,
            "leaf_spreads": _SPREADS,
            "spread_tol": {"type": "number"},
            "growth": {"oneOf": [{"type": "null"}, _GROWTH]},
        },
        "required": ["consistent", "exact", "leaf_spreads", "growth"],
    },
}

REPORT_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "polyleaf report",
    "type": "object",
    "properties": {
        "command": {"type": "string"},
        "inputs": {"type": "object", "additionalProperties": {"type": ["string", "integer", "number", "array", "null"]}},
        "result": {"type": ["object", "null"]},
        "diagnostics": {"type": "array", "items": {"type": "string"}},
        "seed": {"type": ["integer", "null"]},
    },
    "required": ["command", "inputs", "result", "diagnostics", "seed"],
    "additionalProperties": False,
    "allOf": [
        {
            "if": {"properties": {"command": {"const": name}}},
            "then": {"properties": {"result": {"oneOf": [schema, _ERROR]}}},
        }
        for name, schema in RESULT_SCHEMAS.items()
    ],
}
