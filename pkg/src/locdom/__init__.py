"""Constant-round dominating-set approximation on planar graph classes.

A LOCAL-model simulator plus verification suite: the three-phase
approximation pipeline for five planar graph classes, an exact minimum
dominating set oracle, and the exact rational linear programs behind the
worst-case factors.
"""
from .classes import (
    CLASS_PARAMS,
    ClassParams,
    GraphClass,
    check_class_sanity,
    girth,
    has_triangle,
    is_bipartite,
    params_for,
)
from .engine import (
    Broadcast,
    NodeProgram,
    RoundLimitError,
    RunRecord,
    gather_ball,
    run_rounds,
)
from .generators import GENERATOR_KINDS, GeneratorError, generate_graph
from .graph import (
    Graph,
    GraphParseError,
    parse_edge_list,
    parse_vertex_set,
    serialize_graph,
    serialize_vertex_set,
    verify_dominating_set,
)
from .lp import (
    FactorReport,
    LpModel,
    LpSolution,
    build_lp,
    check_solution,
    export_lp,
    factor_report,
    simplex_solve,
)
from .local_program import PipelineProgram, phase1_d1_local, run_pipeline_local
from .oracle import OracleResult, gamma_branch_bound, gamma_bruteforce
from .phases import (
    Color,
    DomSetResult,
    PhaseTrace,
    neighborhood_dominable_within,
    phase1_d1,
    phase2_d2,
    phase3_greedy,
    pipeline_rounds,
    run_pipeline,
    run_pipeline_direct,
)

__version__ = "1.0.0"

__all__ = [
    "Broadcast",
    "CLASS_PARAMS",
    "ClassParams",
    "Color",
    "DomSetResult",
    "FactorReport",
    "GENERATOR_KINDS",
    "GeneratorError",
    "Graph",
    "GraphClass",
    "GraphParseError",
    "LpModel",
    "LpSolution",
    "NodeProgram",
    "OracleResult",
    "PhaseTrace",
    "PipelineProgram",
    "RoundLimitError",
    "RunRecord",
    "build_lp",
    "check_class_sanity",
    "check_solution",
    "export_lp",
    "factor_report",
    "gamma_branch_bound",
    "gamma_bruteforce",
    "gather_ball",
    "generate_graph",
    "girth",
    "has_triangle",
    "is_bipartite",
    "neighborhood_dominable_within",
    "params_for",
    "parse_edge_list",
    "parse_vertex_set",
    "phase1_d1",
    "phase1_d1_local",
    "phase2_d2",
    "phase3_greedy",
    "pipeline_rounds",
    "run_pipeline",
    "run_pipeline_direct",
    "run_pipeline_local",
    "run_rounds",
    "serialize_graph",
    "serialize_vertex_set",
    "simplex_solve",
    "verify_dominating_set",
]
