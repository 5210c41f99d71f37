"""Worst-case size programs for the greedy phase, in exact rationals.

For each graph class the residual-degree greedy admits a linear program
whose optimum bounds |D3| / gamma at the adversarial extreme. Variables
are d_i (share picked at level i) and r_i (share still undominated when
level i starts), i = 1..cap. With edge density eta = num/den the families
are, writing them with cleared positive denominators:

    A_i : sum_{j<=i} d_j - r_i       <= 0          (i = 1..cap)
    B_i : r_i                        <= i + 1      (i = 1..cap)
    C_i : (den*i - 2*num) d_i - num r_i <= 0       (i = low..cap)
    D_i : r_i - r_{i+1} + q_i d_{i+1}  <= 0        (i = 1..cap-1)
          with q_i = (den*(i+1) - 2*num) / num

and the objective maximizes sum_i d_i. The girth-5 class carries an empty
C family (its printed range starts past its cap).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classes import GraphClass, params_for
from .simplex import SimplexResult, simplex_max


@dataclass(frozen=True)
class LpConstraint:
    label: str
    coeffs: dict[str, Fraction]
    rhs: Fraction  # sense is always <=


@dataclass(frozen=True)
class LpModel:
    graph_class: GraphClass
    index_max: int
    variables: tuple[str, ...]
    objective: dict[str, Fraction]  # maximized
    constraints: tuple[LpConstraint, ...]


@dataclass(frozen=True)
class LpSolution:
    status: str
    objective: Fraction | None
    assignment: dict[str, Fraction]
    duals: tuple[Fraction, ...] | None


def build_lp(cls: GraphClass) -> LpModel:
    params = params_for(cls)
    cap = params.residual_cap
    num, den = params.lp_density_num, params.lp_density_den
    low = params.lp_low_index
    d = [f"d{i}" for i in range(1, cap + 1)]
    r = [f"r{i}" for i in range(1, cap + 1)]
    variables = tuple(d + r)
    constraints: list[LpConstraint] = []
    for i in range(1, cap + 1):
        coeffs = {d[j - 1]: Fraction(1) for j in range(1, i + 1)}
        coeffs[r[i - 1]] = Fraction(-1)
        constraints.append(LpConstraint(f"A{i}", coeffs, Fraction(0)))
    for i in range(1, cap + 1):
        constraints.append(
            LpConstraint(f"B{i}", {r[i - 1]: Fraction(1)}, Fraction(i + 1))
        )
    for i in range(low, cap + 1):
        constraints.append(
            LpConstraint(
                f"C{i}",
                {d[i - 1]: Fraction(den * i - 2 * num), r[i - 1]: Fraction(-num)},
                Fraction(0),
            )
        )
    for i in range(1, cap):
        q = Fraction(den * (i + 1) - 2 * num, num)
        constraints.append(
            LpConstraint(
                f"D{i}",
                {r[i - 1]: Fraction(1), r[i]: Fraction(-1), d[i]: q},
                Fraction(0),
            )
        )
    objective = {name: Fraction(1) for name in d}
    return LpModel(cls, cap, variables, objective, tuple(constraints))


def simplex_solve(model: LpModel) -> LpSolution:
    """Exact optimum of the model; feasibility is re-verified on return."""
    index = {name: j for j, name in enumerate(model.variables)}
    c = [model.objective.get(name, Fraction(0)) for name in model.variables]
    rows = []
    rhs = []
    for con in model.constraints:
        row = [Fraction(0)] * len(model.variables)
        for name, coeff in con.coeffs.items():
            row[index[name]] = coeff
        rows.append(row)
        rhs.append(con.rhs)
    result: SimplexResult = simplex_max(c, rows, rhs)
    if result.status != "optimal":
        return LpSolution(result.status, None, {}, None)
    assignment = dict(zip(model.variables, result.x))
    solution = LpSolution("optimal", result.objective, assignment, result.duals)
    failures = check_solution(model, solution)
    if failures:
        raise AssertionError(f"simplex returned an invalid optimum: {failures}")
    return solution


def check_solution(model: LpModel, sol: LpSolution) -> list[str]:
    """Exact primal feasibility plus the duality certificate; returns the
    list of violated conditions (empty = certified optimal)."""
    failures: list[str] = []
    if sol.status != "optimal":
        return [f"status is {sol.status}"]
    for name in model.variables:
        if sol.assignment[name] < 0:
            failures.append(f"{name} negative")
    for con in model.constraints:
        lhs = sum(
            (coeff * sol.assignment[name] for name, coeff in con.coeffs.items()),
            start=Fraction(0),
        )
        if lhs > con.rhs:
            failures.append(f"{con.label} violated: {lhs} > {con.rhs}")
    objective = sum(
        (coeff * sol.assignment[name] for name, coeff in model.objective.items()),
        start=Fraction(0),
    )
    if objective != sol.objective:
        failures.append("objective mismatch")
    if sol.duals is None:
        failures.append("no dual certificate")
        return failures
    if len(sol.duals) != len(model.constraints):
        failures.append("dual length mismatch")
        return failures
    for y, con in zip(sol.duals, model.constraints):
        if y < 0:
            failures.append(f"dual of {con.label} negative")
    for name in model.variables:
        col = sum(
            (
                y * con.coeffs.get(name, Fraction(0))
                for y, con in zip(sol.duals, model.constraints)
            ),
            start=Fraction(0),
        )
        if col < model.objective.get(name, Fraction(0)):
            failures.append(f"dual infeasible at {name}")
    dual_objective = sum(
        (y * con.rhs for y, con in zip(sol.duals, model.constraints)),
        start=Fraction(0),
    )
    if dual_objective != sol.objective:
        failures.append("strong duality gap")
    return failures


@dataclass(frozen=True)
class FactorReport:
    graph_class: GraphClass
    phase12_constant: int
    lp_optimum: Fraction
    total: Fraction
    published_factor: int


def factor_report(cls: GraphClass) -> FactorReport:
    """Worst-case approximation factor: phase 1+2 constant plus the LP
    optimum, both at the adversarial extreme; checked against the
    published integer factor."""
    params = params_for(cls)
    sol = simplex_solve(build_lp(cls))
    total = params.phase12_constant + sol.objective
    report = FactorReport(
        cls, params.phase12_constant, sol.objective, total, params.published_factor
    )
    assert total <= params.published_factor, (
        f"{cls.value}: {total} exceeds published factor {params.published_factor}"
    )
    return report


def export_lp(model: LpModel) -> str:
    """Plain-text form for cross-checking with external solvers."""
    lines = [f"# worst-case greedy-phase program: {model.graph_class.value}"]
    lines.append(
        "maximize " + " + ".join(name for name in model.variables if name in model.objective)
    )
    lines.append("subject to")
    for con in model.constraints:
        terms = []
        for name in model.variables:
            if name in con.coeffs:
                coeff = con.coeffs[name]
                terms.append(f"{coeff} {name}")
        lines.append(f"{con.label}: " + " + ".join(terms) + f" <= {con.rhs}")
    lines.append("bounds: all variables >= 0")
    return "\n".join(lines) + "\n"
