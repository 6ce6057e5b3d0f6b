"""Command line front end.

Thin shell only: every subcommand parses its input, calls library
operations, and prints.  Exit codes: 0 success, 1 validation failure
under --strict, 2 parse or usage error, 3 enumeration cap exceeded,
4 infeasible or unrepairable outcome for a specifically requested
quantity (and generator retry exhaustion).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .corpus import CORPUS_NAMES, corpus
from .errors import (
    EnumerationCapExceeded,
    GenerationExhausted,
    InfeasibleError,
    UnrepairableError,
)
from .frcfile import FrcFileError, parse_frc, write_frc
from .generate import GenSpec, generate
from .model import FRCode, ValidationReport, derive_params, incidence_matrix, validate
from .reconstruction import (
    DEFAULT_CAP,
    degree_report,
    k_fr_exact,
    k_fr_greedy,
    k_star_exact,
    k_star_greedy,
    rate,
    rate_profile,
)
from .repair import helper_sets, repair_degree_exact, repair_degree_greedy
from . import report as rpt


class _StrictFailure(Exception):
    """Raised after strict-mode diagnostics have been printed."""


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_CAP,
        metavar="SUBSETS",
        help=f"subset enumeration budget for exhaustive searches (default {DEFAULT_CAP})",
    )
    common.add_argument(
        "--strict",
        action="store_true",
        help="fail with exit code 1 when the input file's validation reports violations",
    )

    parser = argparse.ArgumentParser(
        prog="frc",
        description="Analyze fractional repetition codes stored as FRC1 text.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="validation and storage profile")
    p.add_argument("file")

    p = sub.add_parser("reconstruct", parents=[common], help="reconstruction degrees")
    p.add_argument("file")
    p.add_argument("--mode", choices=("greedy", "exact", "both"), default="both")
    p.add_argument("--trace", action="store_true", help="show each greedy run step by step")

    p = sub.add_parser("repair", parents=[common], help="per-node repair degrees")
    p.add_argument("file")
    p.add_argument("--node", type=int, metavar="I", help="restrict to one failed node")
    p.add_argument("--mode", choices=("greedy", "exact", "both"), default="both")

    p = sub.add_parser("rate", parents=[common], help="worst-case coverage R(k)")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("-k", type=int, metavar="K", help="single subset size")
    group.add_argument("--profile", action="store_true", help="R(k) for every k")

    p = sub.add_parser("matrix", parents=[common], help="node-by-packet incidence matrix")
    p.add_argument("file")

    p = sub.add_parser("generate", parents=[common], help="emit a seeded random code")
    p.add_argument("--n", type=int, required=True, help="number of nodes")
    p.add_argument("--theta", type=int, required=True, help="number of packets")
    p.add_argument("--rho", type=int, required=True, help="replication per packet")
    p.add_argument("--strong", action="store_true", help="equal node sizes (needs n | rho*theta)")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("corpus", parents=[common], help="emit a bundled reference code")
    p.add_argument("name", choices=CORPUS_NAMES)

    return parser


def _load(args) -> tuple[FRCode, ValidationReport]:
    text = Path(args.file).read_text(encoding="utf-8")
    code = parse_frc(text)
    vr = validate(code)
    if args.strict and not vr.ok:
        for violation in vr.violations:
            print(f"violation: {violation.message()}", file=sys.stderr)
        print(f"{args.file}: validation failed", file=sys.stderr)
        raise _StrictFailure
    return code, vr


def _base_payload(args, code: FRCode, vr: ValidationReport) -> dict:
    return {
        "format": rpt.REPORT_FORMAT,
        "meta": rpt.meta_dict(cap=args.cap),
        "code": rpt.code_dict(code),
        "validation": rpt.validation_dict(vr),
        "params": rpt.params_dict(derive_params(code)),
    }


def _print_validity(vr: ValidationReport) -> None:
    print(f"valid: {'yes' if vr.ok else 'no'}")
    for violation in vr.violations:
        print(f"violation: {violation.message()}")


def _cmd_analyze(args) -> int:
    code, vr = _load(args)
    if args.json:
        print(rpt.render(_base_payload(args, code, vr)), end="")
        return 0
    params = derive_params(code)
    print(f"code: n={code.n} theta={code.theta} rho={code.rho}")
    _print_validity(vr)
    print(f"alpha = {params.alpha}")
    print(f"alpha_i = {' '.join(str(a) for a in params.alpha_i)}")
    print(f"delta_i = {' '.join(str(d) for d in params.delta_i)}")
    print(f"delta = {params.delta}")
    print(f"strong: {'yes' if params.strong else 'no'}")
    print(f"eq1_residual = {vr.eq1_residual}")
    return 0


def _format_trace(trace) -> list[str]:
    lines = [f"trace {trace.algorithm} seed={trace.seed} {trace.outcome}"]
    for step in trace.steps:
        covered = ",".join(str(p) for p in step.covered)
        lines.append(f"  {step.counter}: +node {step.node} covered={covered}")
    return lines


def _cmd_reconstruct(args) -> int:
    code, vr = _load(args)
    values: dict[str, int | None] = {}
    traces = []
    if args.mode in ("greedy", "both"):
        star, star_traces = k_star_greedy(code)
        fr, fr_traces = k_fr_greedy(code)
        values["k_star_greedy"] = star
        values["k_fr_greedy"] = fr
        traces.extend(star_traces)
        traces.extend(fr_traces)
    if args.mode in ("exact", "both"):
        values["k_star_exact"] = k_star_exact(code, cap=args.cap)
        values["k_fr_exact"] = k_fr_exact(code, cap=args.cap)
    if args.json:
        payload = _base_payload(args, code, vr)
        payload["degrees"] = dict(values, target=code.theta - 1)
        if args.trace:
            payload["traces"] = [rpt.trace_dict(t) for t in traces]
        print(rpt.render(payload), end="")
        return 0
    for key, value in values.items():
        print(f"{key} = {'no valid run' if value is None else value}")
    if args.trace:
        for trace in traces:
            for line in _format_trace(trace):
                print(line)
    return 0


def _repair_row(code: FRCode, i: int, mode: str, cap: int):
    """One node's repair numbers, or a missing-packet flag row."""
    missing = tuple(
        p for p, helpers in helper_sets(code, i).entries.items() if not helpers
    )
    alpha_i = len(code.node(i))
    if missing:
        return {"node": i, "alpha": alpha_i, "missing": missing}
    row: dict = {"node": i, "alpha": alpha_i, "missing": ()}
    if mode in ("greedy", "both"):
        d, groups = repair_degree_greedy(code, i)
        row["greedy"] = d
        row["groups"] = groups
    if mode in ("exact", "both"):
        row["exact"] = repair_degree_exact(code, i, cap=cap)
    return row


def _cmd_repair(args) -> int:
    code, vr = _load(args)
    if args.node is not None:
        code.node(args.node)  # range check up front
        row = _repair_row(code, args.node, args.mode, args.cap)
        if row["missing"]:
            raise UnrepairableError(node=args.node, packets=row["missing"])
        rows = [row]
    else:
        rows = [_repair_row(code, i, args.mode, args.cap) for i in range(1, code.n + 1)]
    if args.json:
        payload = _base_payload(args, code, vr)
        payload["repair"] = {"mode": args.mode, "per_node": [_repair_json(r, args.mode) for r in rows]}
        print(rpt.render(payload), end="")
        return 0
    if args.node is not None and args.mode != "both":
        print(rows[0][args.mode])  # bare scalar
        return 0
    for row in rows:
        print(_repair_line(row, args.mode))
    return 0


def _repair_json(row: dict, mode: str) -> dict:
    entry: dict = {
        "node": row["node"],
        "alpha": row["alpha"],
        "missing_packets": list(row["missing"]),
    }
    if row["missing"]:
        if mode in ("greedy", "both"):
            entry["greedy"] = None
            entry["groups"] = []
        if mode in ("exact", "both"):
            entry["exact"] = None
        return entry
    if mode in ("greedy", "both"):
        entry["greedy"] = row["greedy"]
        entry["groups"] = [rpt.group_dict(g) for g in row["groups"]]
    if mode in ("exact", "both"):
        entry["exact"] = row["exact"]
    return entry


def _repair_line(row: dict, mode: str) -> str:
    parts = [f"node {row['node']}: alpha={row['alpha']}"]
    if row["missing"]:
        listed = ",".join(str(p) for p in row["missing"])
        parts.append(f"unrepairable (missing packets: {listed})")
        return " ".join(parts)
    if mode in ("greedy", "both"):
        parts.append(f"greedy={row['greedy']}")
    if mode in ("exact", "both"):
        parts.append(f"exact={row['exact']}")
    return " ".join(parts)


def _cmd_rate(args) -> int:
    code, vr = _load(args)
    if args.profile:
        profile = rate_profile(code, cap=args.cap)
        if args.json:
            payload = _base_payload(args, code, vr)
            payload["rate_profile"] = list(profile)
            print(rpt.render(payload), end="")
            return 0
        for k, value in enumerate(profile, start=1):
            print(f"R({k}) = {value}")
        return 0
    value = rate(code, args.k, cap=args.cap)
    if args.json:
        payload = _base_payload(args, code, vr)
        payload["rate"] = {"k": args.k, "value": value}
        print(rpt.render(payload), end="")
        return 0
    print(value)
    return 0


def _cmd_matrix(args) -> int:
    code, vr = _load(args)
    matrix = incidence_matrix(code)
    if args.json:
        payload = _base_payload(args, code, vr)
        payload["matrix"] = rpt.matrix_dict(matrix)
        print(rpt.render(payload), end="")
        return 0
    for row in matrix.bits:
        print(" ".join(str(b) for b in row))
    return 0


def _cmd_generate(args) -> int:
    spec = GenSpec(
        n=args.n,
        theta=args.theta,
        rho=args.rho,
        seed=args.seed,
        kind="strong" if args.strong else "random",
    )
    code = generate(spec)
    if args.json:
        payload = {
            "format": rpt.REPORT_FORMAT,
            "meta": rpt.meta_dict(cap=args.cap, seed=args.seed),
            "code": rpt.code_dict(code),
        }
        print(rpt.render(payload), end="")
        return 0
    print(write_frc(code), end="")
    return 0


def _cmd_corpus(args) -> int:
    code = corpus()[args.name]
    if args.json:
        payload = {
            "format": rpt.REPORT_FORMAT,
            "meta": rpt.meta_dict(cap=args.cap, name=args.name),
            "code": rpt.code_dict(code),
        }
        print(rpt.render(payload), end="")
        return 0
    print(write_frc(code), end="")
    return 0


_HANDLERS = {
    "analyze": _cmd_analyze,
    "reconstruct": _cmd_reconstruct,
    "repair": _cmd_repair,
    "rate": _cmd_rate,
    "matrix": _cmd_matrix,
    "generate": _cmd_generate,
    "corpus": _cmd_corpus,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except _StrictFailure:
        return 1
    except FrcFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InfeasibleError, UnrepairableError, GenerationExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
