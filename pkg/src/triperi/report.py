"""Deterministic JSON and text rendering of analysis results.

Exact numbers render as ``num/den`` strings, floats as shortest round-trip
JSON numbers, points by name.
"""
from __future__ import annotations

import json
from typing import Any

from .analysis import AnalysisReport, ContinuityResult
from .metric import AxiomReport, MetricSpace
from .numeric import format_scalar, is_exact
from .solver import SolveResult


def _num(x):
    if x is None:
        return None
    if is_exact(x):
        return format_scalar(x)
    return float(x)


def axiom_dict(space: MetricSpace, r: AxiomReport) -> dict[str, Any]:
    return {
        "passed": r.passed,
        "axiom": r.axiom,
        "witness": [space.name(p) for p in r.witness],
        "window": r.window,
        "detail": r.detail,
    }


def analysis_dict(space: MetricSpace, r: AnalysisReport) -> dict[str, Any]:
    name = space.name
    return {
        "alpha_star": _num(r.alpha_star),
        "alpha_witness": [name(p) for p in r.alpha_witness],
        "lipschitz": _num(r.lipschitz),
        "lipschitz_witness": [name(p) for p in r.lipschitz_witness],
        "is_perimeter_contracting": r.is_perimeter_contracting,
        "is_contraction": r.is_contraction,
        "condition_i_witness": None if r.condition_i_witness is None else name(r.condition_i_witness),
        "fixed_points": [name(p) for p in r.fixed_points],
        "fixed_point_count": r.fixed_point_count,
        "window": r.window,
    }


def solve_dict(space: MetricSpace, r: SolveResult) -> dict[str, Any]:
    return {
        "status": r.status.value,
        "point": space.name(r.point),
        "iterations": r.iterations,
        "final_gap": _num(r.final_gap),
        "tol": _num(r.tol),
        "alpha_used": _num(r.alpha_used),
        "p0": _num(r.p0),
        "witness": None if r.witness is None else space.name(r.witness),
        "bound_trace": None if r.bound_trace is None else [_num(b) for b in r.bound_trace],
    }


def continuity_dict(space: MetricSpace, r: ContinuityResult) -> dict[str, Any]:
    return {
        "passed": r.passed,
        "delta": _num(r.delta),
        "witness": None if r.witness is None else space.name(r.witness),
        "checked": r.checked,
    }


def document(command: str, inputs: dict[str, Any], result: dict[str, Any]) -> dict[str, Any]:
    return {"command": command, "inputs": inputs, "result": result}


def render_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _text_value(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, list):
        if v and isinstance(v[0], dict):
            return "\n" + "\n".join("  " + " ".join(f"{k}={_text_value(x)}" for k, x in row.items()) for row in v)
        return "[" + ", ".join(_text_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return " ".join(f"{k}={_text_value(x)}" for k, x in v.items())
    return str(v)


def render_text(doc: dict[str, Any]) -> str:
    lines = [f"command: {doc['command']}"]
    for k, v in doc["inputs"].items():
        lines.append(f"input.{k}: {_text_value(v)}")
    for k, v in doc["result"].items():
        text = _text_value(v)
        lines.append(f"{k}:{text}" if text.startswith("\n") else f"{k}: {text}")
    return "\n".join(lines) + "\n"
