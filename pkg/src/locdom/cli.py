"""Command-line front end.

Subcommands: gen, run, exact, lp, verify, bench. Exit codes: 0 success,
1 a class-invariant warning was reported (or a verification failed),
2 input or parse error. All output is deterministic for fixed inputs.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classes import GraphClass, check_class_sanity
from .generators import GENERATOR_KINDS, GeneratorError, generate_graph
from .graph import (
    GraphParseError,
    parse_edge_list,
    parse_vertex_set,
    serialize_graph,
)
from .harness import ExperimentConfig, report_to_csv, report_to_json, run_experiment
from .lp import build_lp, export_lp, factor_report
from .oracle import gamma_branch_bound
from .phases import run_pipeline

CLASS_NAMES = tuple(cls.value for cls in GraphClass)


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def cmd_gen(args) -> int:
    params = {}
    for name in ("rows", "cols", "n", "leaves"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    g = generate_graph(args.kind, params, args.seed)
    _write(args.output, serialize_graph(g))
    return 0


def cmd_run(args) -> int:
    cls = GraphClass.from_name(args.graph_class)
    g = parse_edge_list(_read(args.file))
    result = run_pipeline(g, cls)
    trace = result.trace
    d3_size = sum(len(members) for members in trace.deltas.values())
    if args.json:
        payload = {
            "class": cls.value,
            "n": g.n,
            "m": g.m,
            "dominating_set": sorted(result.dominating_set),
            "alg_size": result.size,
            "d1": sorted(trace.d1),
            "d2": sorted(trace.d2),
            "d3": sorted(v for members in trace.deltas.values() for v in members),
            "cleanup": sorted(trace.cleanup),
            "rounds_used": trace.rounds_used,
            "warnings": list(result.warnings),
        }
        if args.trace:
            payload["w"] = sorted(trace.w)
            payload["b"] = {str(v): sorted(s) for v, s in sorted(trace.b.items())}
            payload["deltas"] = {
                str(i): sorted(members)
                for i, members in sorted(trace.deltas.items(), reverse=True)
            }
            payload["r_sizes"] = {
                str(i): size for i, size in sorted(trace.r_sizes.items(), reverse=True)
            }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        print(f"class: {cls.value}")
        print(f"n: {g.n}  m: {g.m}")
        print(f"d1: {len(trace.d1)}  d2: {len(trace.d2)}  d3: {d3_size}  cleanup: {len(trace.cleanup)}")
        print(f"alg_size: {result.size}")
        print(f"rounds_used: {trace.rounds_used}")
        print("dominating_set:", " ".join(map(str, sorted(result.dominating_set))))
        if args.trace:
            sanity = check_class_sanity(g, cls)
            for violation in sanity:
                print(f"sanity: {violation}")
            if trace.w:
                print("w:", " ".join(map(str, sorted(trace.w))))
                for v in sorted(trace.b):
                    print(f"b[{v}]:", " ".join(map(str, sorted(trace.b[v]))))
            for i in sorted(trace.deltas, reverse=True):
                members = trace.deltas[i]
                size_r = trace.r_sizes[i]
                if members or size_r:
                    ids = " ".join(map(str, sorted(members)))
                    print(f"level {i}: |R|={size_r} |delta|={len(members)}"
                          + (f" members: {ids}" if ids else ""))
        for warning in result.warnings:
            print(f"warning: {warning}")
    return 1 if result.warnings else 0


def cmd_exact(args) -> int:
    g = parse_edge_list(_read(args.file))
    result = gamma_branch_bound(g, args.budget)
    print(f"gamma: {result.gamma}" if result.exhausted else f"best_found: {result.gamma}")
    print("witness:", " ".join(map(str, sorted(result.witness))))
    print(f"nodes_explored: {result.nodes_explored}")
    print(f"exhausted: {str(result.exhausted).lower()}")
    return 0


def cmd_lp(args) -> int:
    cls = GraphClass.from_name(args.graph_class)
    report = factor_report(cls)
    if args.export:
        _write(args.export, export_lp(build_lp(cls)))
    print(f"class: {cls.value}")
    print(f"phase12_constant: {report.phase12_constant}")
    print(f"lp_optimum: {report.lp_optimum} ({float(report.lp_optimum):.6f})")
    print(f"total: {report.total} ({float(report.total):.6f})")
    print(f"published_factor: {report.published_factor}")
    print(f"within_published: {str(report.total <= report.published_factor).lower()}")
    return 0


def cmd_verify(args) -> int:
    g = parse_edge_list(_read(args.file))
    candidate = parse_vertex_set(_read(args.domset_file), g.n)
    dominated = set(candidate)
    for v in candidate:
        dominated.update(g.adjacency[v])
    missing = sorted(set(range(g.n)) - dominated)
    if not missing:
        print(f"OK: {len(candidate)} vertices dominate all {g.n}")
        return 0
    shown = " ".join(map(str, missing[:10]))
    print(f"NOT a dominating set: {len(missing)} undominated (first: {shown})")
    return 1


def cmd_bench(args) -> int:
    cfg = ExperimentConfig.from_json(_read(args.config))
    rows = run_experiment(cfg)
    text = report_to_json(rows) if args.json else report_to_csv(rows)
    _write(args.output, text)
    return 1 if any(row.warnings for row in rows) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locdom",
        description="Constant-round dominating-set approximation toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance of a named family")
    p.add_argument("--kind", required=True, choices=GENERATOR_KINDS)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--leaves", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("run", help="run the approximation pipeline on a graph file")
    p.add_argument("--class", dest="graph_class", required=True, choices=CLASS_NAMES)
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("exact", help="exact minimum dominating set (branch and bound)")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=10**7)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("lp", help="solve a worst-case program and report the factor")
    p.add_argument("--class", dest="graph_class", required=True, choices=CLASS_NAMES)
    p.add_argument("--export")
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser("verify", help="check a vertex set against a graph")
    p.add_argument("file")
    p.add_argument("domset_file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run an experiment config into a report")
    p.add_argument("--config", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, GeneratorError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
