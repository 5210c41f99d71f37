"""Experiment runner: generators x seeds -> pipeline -> oracle -> report.

Reports are deterministic for a fixed config: rows appear in config order
and rerunning a config reproduces the report byte for byte.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from typing import Any

from .classes import GraphClass
from .generators import generate_graph
from .oracle import gamma_branch_bound
from .phases import run_pipeline


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: dict[str, Any]
    seeds: tuple[int, ...]


@dataclass(frozen=True)
class ExperimentConfig:
    graph_class: GraphClass
    generators: tuple[GeneratorSpec, ...]
    oracle_budget: int = 10**7  # 0 disables the oracle

    @staticmethod
    def from_json(text: str) -> "ExperimentConfig":
        data = json.loads(text)
        cls = GraphClass.from_name(data["class"])
        specs = []
        for entry in data["generators"]:
            seeds = tuple(int(s) for s in entry.get("seeds", [0]))
            if not seeds:
                raise ValueError("seed list must be nonempty")
            specs.append(
                GeneratorSpec(entry["kind"], dict(entry.get("params", {})), seeds)
            )
        if not specs:
            raise ValueError("config needs at least one generator")
        budget = int(data.get("oracle_budget", 10**7))
        return ExperimentConfig(cls, tuple(specs), budget)


@dataclass(frozen=True)
class ReportRow:
    instance_id: str
    n: int
    m: int
    graph_class: str
    d1: int
    d2: int
    d3: int
    cleanup: int
    rounds_used: int
    alg_size: int
    gamma: int | None
    ratio: float | None
    warnings: str


CSV_COLUMNS = (
    "instance_id",
    "n",
    "m",
    "class",
    "d1",
    "d2",
    "d3",
    "cleanup",
    "rounds_used",
    "alg_size",
    "gamma",
    "ratio",
    "warnings",
)


def instance_label(kind: str, params: dict[str, Any], seed: int) -> str:
    inner = ",".join(f"{k}={params[k]}" for k in sorted(params))
    return f"{kind}({inner})@{seed}"


def run_experiment(cfg: ExperimentConfig) -> list[ReportRow]:
    rows: list[ReportRow] = []
    for spec in cfg.generators:
        for seed in spec.seeds:
            g = generate_graph(spec.kind, spec.params, seed)
            result = run_pipeline(g, cfg.graph_class)
            trace = result.trace
            d3_size = sum(len(members) for members in trace.deltas.values())
            gamma = ratio = None
            if cfg.oracle_budget > 0:
                oracle = gamma_branch_bound(g, cfg.oracle_budget)
                if oracle.exhausted:
                    gamma = oracle.gamma
                    ratio = result.size / gamma if gamma else None
            rows.append(
                ReportRow(
                    instance_id=instance_label(spec.kind, spec.params, seed),
                    n=g.n,
                    m=g.m,
                    graph_class=cfg.graph_class.value,
                    d1=len(trace.d1),
                    d2=len(trace.d2),
                    d3=d3_size,
                    cleanup=len(trace.cleanup),
                    rounds_used=trace.rounds_used,
                    alg_size=result.size,
                    gamma=gamma,
                    ratio=ratio,
                    warnings="; ".join(result.warnings),
                )
            )
    return rows


def _cells(row: ReportRow) -> list[str]:
    data = asdict(row)
    data["class"] = data.pop("graph_class")
    cells = []
    for column in CSV_COLUMNS:
        value = data[column]
        if value is None:
            cells.append("")
        elif column == "ratio":
            cells.append(f"{value:.6f}")
        else:
            cells.append(str(value))
    return cells


def report_to_csv(rows: list[ReportRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(_cells(row))
    return buffer.getvalue()


def report_to_json(rows: list[ReportRow]) -> str:
    payload = [dict(zip(CSV_COLUMNS, _cells(row))) for row in rows]
    return json.dumps(payload, indent=2) + "\n"
