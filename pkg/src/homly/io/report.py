"""JSON verdict reports."""
from __future__ import annotations

import json
from typing import Iterable

import jsonschema

from ..identities import AxiomSuiteReport, CheckReport

__all__ = ["REPORT_SCHEMA", "report_document", "emit_report", "load_report"]

REPORT_SCHEMA = {
    "type": "object",
    "required": ["checks"],
    "additionalProperties": False,
    "properties": {
        "tool": {"type": "string"},
        "version": {"type": "string"},
        "input": {"type": "string"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["identity", "holds", "tuples_checked", "counterexamples"],
                "additionalProperties": False,
                "properties": {
                    "identity": {"type": "string"},
                    "holds": {"type": "boolean"},
                    "tuples_checked": {"type": "integer", "minimum": 0},
                    "counterexamples": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["tuple", "lhs", "rhs"],
                            "additionalProperties": False,
                            "properties": {
                                "tuple": {"type": "array",
                                          "items": {"type": "integer", "minimum": 1}},
                                "lhs": {"type": "string"},
                                "rhs": {"type": "string"},
                                "part": {"type": "string"},
                            },
                        },
                    },
                },
            },
        },
    },
}


def _flatten(reports) -> list[CheckReport]:
    out: list[CheckReport] = []
    for r in reports:
        if isinstance(r, AxiomSuiteReport):
            out.extend(r.reports.values())
        else:
            out.append(r)
    return out


def _check_entry(r: CheckReport) -> dict:
    cxs = []
    for cx in r.counterexamples:
        item = {"tuple": list(cx.tuple), "lhs": str(cx.lhs), "rhs": str(cx.rhs)}
        if cx.part is not None:
            item["part"] = cx.part
        cxs.append(item)
    return {"identity": r.identity_name, "holds": r.holds,
            "tuples_checked": r.tuples_checked, "counterexamples": cxs}


def report_document(reports: Iterable[CheckReport | AxiomSuiteReport],
                    input: str | None = None, tool_version: str | None = None) -> dict:
    doc: dict = {}
    if tool_version is not None:
        doc["tool"] = "homly"
        doc["version"] = tool_version
    if input is not None:
        doc["input"] = input
    doc["checks"] = [_check_entry(r) for r in _flatten(reports)]
    return doc


def emit_report(reports: Iterable[CheckReport | AxiomSuiteReport],
                input: str | None = None, tool_version: str | None = None) -> str:
    """Deterministic JSON text; scalars use the canonical printed form."""
    doc = report_document(reports, input, tool_version)
    jsonschema.validate(doc, REPORT_SCHEMA)
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_report(text: str) -> dict:
    """Parse and schema-validate a report produced by :func:`emit_report`."""
    doc = json.loads(text)
    jsonschema.validate(doc, REPORT_SCHEMA)
    return doc
