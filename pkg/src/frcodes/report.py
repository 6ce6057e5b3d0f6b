"""JSON report assembly.

Every --json payload is built from these helpers and rendered with
sorted keys and a fixed indent, so identical inputs and flags yield
byte-identical output.  Nothing here computes; it only reshapes the
dataclasses from the analysis modules into plain dicts.
"""

from __future__ import annotations

import json

from . import __version__
from .model import (
    DerivedParams,
    FRCode,
    IncidenceMatrix,
    ValidationReport,
    Violation,
)
from .reconstruction import GreedyTrace
from .repair import NodeRepair, RepairGroup

REPORT_FORMAT = 1


def render(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def meta_dict(*, cap: int, seed: int | None = None, name: str | None = None) -> dict:
    meta: dict = {"tool": "frcodes", "version": __version__, "cap": cap}
    if seed is not None:
        meta["seed"] = seed
    if name is not None:
        meta["name"] = name
    return meta


def code_dict(code: FRCode) -> dict:
    return {
        "n": code.n,
        "theta": code.theta,
        "rho": code.rho,
        "nodes": [sorted(packets) for packets in code.nodes],
    }


def violation_dict(violation: Violation) -> dict:
    entry: dict = {"kind": violation.kind, "message": violation.message()}
    for field in ("node", "packet", "actual", "expected"):
        value = getattr(violation, field)
        if value is not None:
            entry[field] = value
    return entry


def validation_dict(report: ValidationReport) -> dict:
    return {
        "ok": report.ok,
        "per_packet_replication": list(report.per_packet_replication),
        "eq1_residual": report.eq1_residual,
        "violations": [violation_dict(v) for v in report.violations],
    }


def params_dict(params: DerivedParams) -> dict:
    return {
        "alpha": params.alpha,
        "alpha_i": list(params.alpha_i),
        "delta_i": list(params.delta_i),
        "delta": params.delta,
        "strong": params.strong,
    }


def matrix_dict(matrix: IncidenceMatrix) -> dict:
    return {
        "rows": matrix.rows,
        "cols": matrix.cols,
        "bits": [list(row) for row in matrix.bits],
    }


def trace_dict(trace: GreedyTrace) -> dict:
    return {
        "algorithm": trace.algorithm,
        "seed": trace.seed,
        "outcome": trace.outcome,
        "steps": [
            {"counter": s.counter, "node": s.node, "covered": list(s.covered)}
            for s in trace.steps
        ],
    }


def group_dict(group: RepairGroup) -> dict:
    return {"helper": group.helper, "packets": list(group.packets)}


def node_repair_dict(row: NodeRepair, *, mode: str) -> dict:
    entry: dict = {
        "node": row.node,
        "alpha": row.alpha_i,
        "missing_packets": list(row.missing_packets),
    }
    if mode in ("greedy", "both"):
        entry["greedy"] = row.d_greedy
        entry["groups"] = [group_dict(g) for g in row.groups]
    if mode in ("exact", "both"):
        entry["exact"] = row.d_exact
    return entry
