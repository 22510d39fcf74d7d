"""Command-line interface: compute invariants, apply composition rules, and
cross-check them against the exact search.

Exit codes: 0 success, 1 malformed input, 2 order cap exceeded,
3 precondition failed, 4 formula/oracle mismatch (a finding).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .attach import decomposition_from_json, fdim_star
from .compose import (
    THEOREMS_ON_DECOMPOSITIONS,
    THEOREMS_ON_ROOTED_SPECS,
    TheoremResult,
    block_graph_fdim,
    corollary3_fdim,
    cor5_fdim,
    decomposition_suite,
    prop1_lower_bound,
    prop7_fdim,
    prop9_bounds,
    rooted_spec_from_json,
    theorem2_fdim,
    verify,
    _uniform_of,
)
from .errors import (
    FtmdError,
    GraphBuildError,
    IllegalParameter,
    InputFormatError,
    OrderCapExceeded,
    PreconditionFailed,
    UnsupportedConfiguration,
)
from .families import FAMILY_NAMES, FamilySpec, generate
from .graph import (
    Graph,
    format_edge_list,
    graph_from_json_dict,
    is_path_graph,
    parse_edge_list,
)
from .resolve import fdim, fdim_plus, metric_dimension, theta

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_CAP = 2
EXIT_PRECONDITION = 3
EXIT_MISMATCH = 4

ORACLE_CAP_ENV = "FTMD_ORACLE_CAP"

INVARIANTS = ("mdim", "fdim", "fdim-plus", "fdim-star", "theta")
THEOREMS = THEOREMS_ON_DECOMPOSITIONS + THEOREMS_ON_ROOTED_SPECS


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors, which this tool reserves
    # for cap violations; remap to the malformed-input code instead.
    def error(self, message: str):
        raise _UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: one subcommand plus its shared knobs."""

    command: str
    input_path: str | None = None
    input_format: str = "edgelist"
    invariant: str | None = None
    anchors: tuple[int, ...] | None = None
    theorem: str | None = None
    seed: int = 0
    count: int | None = None
    oracle_cap: int | None = None
    relaxed_cor3: bool = False
    output: str = "human"
    timings: bool = False
    family: str | None = None
    size: int | None = None


def _build_parser() -> _Parser:
    parser = _Parser(prog="ftmd", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: _Parser) -> None:
        p.add_argument("--oracle-cap", type=int, default=None,
                       help=f"order cap for exact searches (default: ${ORACLE_CAP_ENV} or built-in)")
        p.add_argument("--output", choices=("human", "json"), default="human")
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock timings in the report")

    p = sub.add_parser("compute", help="exact invariant of a single graph")
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--format", dest="input_format", choices=("edgelist", "json"),
                   default="edgelist")
    p.add_argument("--invariant", required=True, choices=INVARIANTS)
    p.add_argument("--at", default=None, help="comma-separated anchor vertices")
    common(p)

    p = sub.add_parser("compose", help="apply a composition rule to a spec file")
    p.add_argument("--input", required=True, help="decomposition or rooted-product JSON")
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    p.add_argument("--relaxed-cor3", action="store_true")
    common(p)

    p = sub.add_parser("verify", help="cross-check a rule against the exact search")
    p.add_argument("--input", default=None, help="spec file (omit for --count batches)")
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    p.add_argument("--relaxed-cor3", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=None,
                   help="verify this many seeded random instances instead of a file")
    common(p)

    p = sub.add_parser("generate", help="emit a named family graph or decomposition")
    p.add_argument("family", choices=FAMILY_NAMES)
    p.add_argument("size", type=int, nargs="?", default=None)
    common(p)
    return parser


def _config_from(ns: argparse.Namespace) -> RunConfig:
    anchors = None
    if getattr(ns, "at", None) is not None:
        try:
            anchors = tuple(int(x) for x in str(ns.at).replace(",", " ").split())
        except ValueError as exc:
            raise InputFormatError(f"bad --at value: {exc}") from exc
    cap = getattr(ns, "oracle_cap", None)
    if cap is None and os.environ.get(ORACLE_CAP_ENV):
        try:
            cap = int(os.environ[ORACLE_CAP_ENV])
        except ValueError as exc:
            raise InputFormatError(f"bad {ORACLE_CAP_ENV}: {exc}") from exc
    if cap is not None and cap < 2:
        raise InputFormatError(f"oracle cap must be >= 2, got {cap}")
    return RunConfig(
        command=ns.command,
        input_path=getattr(ns, "input", None),
        input_format=getattr(ns, "input_format", "edgelist"),
        invariant=getattr(ns, "invariant", None),
        anchors=anchors,
        theorem=getattr(ns, "theorem", None),
        seed=getattr(ns, "seed", 0),
        count=getattr(ns, "count", None),
        oracle_cap=cap,
        relaxed_cor3=getattr(ns, "relaxed_cor3", False),
        output=getattr(ns, "output", "human"),
        timings=getattr(ns, "timings", False),
        family=getattr(ns, "family", None),
        size=getattr(ns, "size", None),
    )


def _load_graph(cfg: RunConfig) -> Graph:
    text = Path(cfg.input_path).read_text()
    if cfg.input_format == "json":
        return graph_from_json_dict(json.loads(text))
    return parse_edge_list(text)


def _load_json(path: str):
    return json.loads(Path(path).read_text())


def _emit(payload: dict, cfg: RunConfig) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    for key, value in payload.items():
        if key == "preconditions":
            print(f"{key:16}")
            for check in value:
                mark = "ok" if check["passed"] else "FAILED"
                print(f"    [{mark:6}] {check['name']}")
        elif key == "instances":
            for inst in value:
                status = "ok" if inst["ok"] else "MISMATCH"
                print(f"    #{inst['index']:<4} order={inst['order']:<3} "
                      f"formula={inst['formula']} oracle={inst['oracle']} {status}")
        elif isinstance(value, (list, tuple)):
            print(f"{key:16} {' '.join(str(x) for x in value)}")
        else:
            print(f"{key:16} {value}")


def _theorem_payload(res: TheoremResult) -> dict:
    payload: dict = {"theorem": res.theorem, "value": res.value}
    if res.components is not None:
        payload["components"] = list(res.components)
    if res.bounds is not None:
        payload["bounds"] = list(res.bounds)
    if res.witness is not None:
        payload["witness"] = list(res.witness)
        payload["witness_valid"] = res.witness_valid
    if res.detail:
        payload["detail"] = res.detail
    payload["preconditions"] = [
        {"name": name, "passed": ok} for name, ok in res.preconditions
    ]
    return payload


def _failure_payload(exc: PreconditionFailed) -> dict:
    return {
        "theorem": exc.theorem,
        "value": None,
        "failed": list(exc.failed),
        "preconditions": [{"name": name, "passed": ok} for name, ok in exc.checks],
    }


def cmd_compute(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    started = time.perf_counter()
    witness: list[int] | None
    if cfg.invariant == "mdim":
        report = metric_dimension(g)
        value, witness, method = report.value, list(report.witness), report.method
    elif cfg.invariant == "fdim":
        report = fdim(g, cap=cfg.oracle_cap)
        value, witness, method = report.value, list(report.witness), report.method
    elif cfg.invariant == "fdim-plus":
        report = fdim_plus(g, cap=cfg.oracle_cap)
        value, witness, method = report.value, list(report.witness), report.method
    elif cfg.invariant == "fdim-star":
        if cfg.anchors is None:
            raise InputFormatError("fdim-star needs --at")
        report = fdim_star(g, cfg.anchors, cap=cfg.oracle_cap)
        value, witness, method = report.value, list(report.witness), report.method
    else:  # theta
        if cfg.anchors is None:
            raise InputFormatError("theta needs --at")
        value, witness, method = theta(g, cfg.anchors, cap=cfg.oracle_cap), None, "oracle"
    elapsed = time.perf_counter() - started
    payload = {
        "invariant": cfg.invariant,
        "n": g.n,
        "value": value,
        "witness": witness,
        "method": method,
    }
    if cfg.anchors is not None:
        payload["anchors"] = list(cfg.anchors)
    if cfg.timings:
        payload["timings"] = {"compute_s": round(elapsed, 6)}
    _emit(payload, cfg)
    return EXIT_OK


def _apply_theorem(cfg: RunConfig, payload_obj) -> TheoremResult:
    theorem = cfg.theorem
    if theorem in THEOREMS_ON_DECOMPOSITIONS:
        dec = decomposition_from_json(payload_obj)
        if theorem == "prop1":
            value = prop1_lower_bound(dec, cap=cfg.oracle_cap)
            return TheoremResult("prop1", value, (), bounds=(value, dec.composite.n))
        if theorem == "thm2":
            return theorem2_fdim(dec, cap=cfg.oracle_cap)
        if theorem == "cor3":
            return corollary3_fdim(dec, relaxed=cfg.relaxed_cor3, cap=cfg.oracle_cap)
        return block_graph_fdim(dec)
    spec = rooted_spec_from_json(payload_obj)
    if theorem == "cor5":
        return cor5_fdim(spec, cap=cfg.oracle_cap)
    if theorem == "prop7":
        rp = _uniform_of(spec)
        return prop7_fdim(spec.base, rp.graph, rp.root, cap=cfg.oracle_cap)
    rp = _uniform_of(spec)
    leaves = is_path_graph(rp.graph)
    if leaves is None:
        raise InputFormatError("prop9 needs path pieces")
    return prop9_bounds(
        spec.base, rp.graph.n, leaf_root=rp.root in leaves, cap=cfg.oracle_cap
    )


def cmd_compose(cfg: RunConfig) -> int:
    obj = _load_json(cfg.input_path)
    try:
        res = _apply_theorem(cfg, obj)
    except PreconditionFailed as exc:
        _emit(_failure_payload(exc), cfg)
        return EXIT_PRECONDITION
    _emit(_theorem_payload(res), cfg)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.count is not None:
        return _verify_batch(cfg)
    if cfg.input_path is None:
        raise InputFormatError("verify needs --input or --count")
    obj = _load_json(cfg.input_path)
    if cfg.theorem in THEOREMS_ON_DECOMPOSITIONS:
        target = decomposition_from_json(obj)
    else:
        target = rooted_spec_from_json(obj)
    try:
        report = verify(target, cfg.theorem, oracle_cap=cfg.oracle_cap,
                        relaxed_cor3=cfg.relaxed_cor3)
    except PreconditionFailed as exc:
        _emit(_failure_payload(exc), cfg)
        return EXIT_PRECONDITION
    payload = {
        "theorem": report.theorem,
        "formula": report.formula_value,
        "oracle": report.oracle_value,
        "ok": report.ok,
        "composite_order": report.composite_order,
    }
    if report.bounds is not None:
        payload["bounds"] = list(report.bounds)
    if report.witness_valid is not None:
        payload["witness_valid"] = report.witness_valid
    if cfg.timings:
        payload["timings"] = {
            "formula_s": round(report.elapsed_formula, 6),
            "oracle_s": round(report.elapsed_oracle, 6),
        }
    _emit(payload, cfg)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _verify_batch(cfg: RunConfig) -> int:
    theorem = cfg.theorem
    if theorem not in ("prop1", "thm2", "cor3"):
        raise InputFormatError(f"batch verification supports prop1/thm2/cor3, not {theorem}")
    condition = None if theorem == "prop1" else theorem
    max_order = 14 if theorem == "prop1" else 16
    cap = cfg.oracle_cap if cfg.oracle_cap is not None else max_order
    decs = decomposition_suite(cfg.seed, cfg.count, (3, 4, 5), max_order, condition)
    instances = []
    failures = 0
    for idx, dec in enumerate(decs):
        report = verify(dec, theorem, oracle_cap=cap, relaxed_cor3=cfg.relaxed_cor3)
        if not report.ok:
            failures += 1
        instances.append(
            {
                "index": idx,
                "order": report.composite_order,
                "formula": report.formula_value,
                "oracle": report.oracle_value,
                "ok": report.ok,
            }
        )
    payload = {
        "theorem": theorem,
        "seed": cfg.seed,
        "count": len(decs),
        "passed": len(decs) - failures,
        "failed": failures,
        "instances": instances,
    }
    _emit(payload, cfg)
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def cmd_generate(cfg: RunConfig) -> int:
    made = generate(FamilySpec(cfg.family, cfg.size))
    if isinstance(made, Graph):
        sys.stdout.write(format_edge_list(made))
    else:
        from .attach import decomposition_to_json

        print(json.dumps(decomposition_to_json(made), indent=2, sort_keys=True))
    return EXIT_OK


_HANDLERS = {
    "compute": cmd_compute,
    "compose": cmd_compose,
    "verify": cmd_verify,
    "generate": cmd_generate,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
        cfg = _config_from(ns)
        return _HANDLERS[cfg.command](cfg)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OrderCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PreconditionFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (
        InputFormatError,
        GraphBuildError,
        IllegalParameter,
        UnsupportedConfiguration,
        FtmdError,
        json.JSONDecodeError,
        OSError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
