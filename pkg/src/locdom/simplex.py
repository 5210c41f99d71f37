"""Two-phase tableau simplex over exact rationals.

Solves  maximize c.x  subject to  A.x <= b, x >= 0  with Fraction
arithmetic throughout: no tolerances anywhere. The reduced-cost row is
carried in the tableau and pivoted along with the constraint rows.

Pivoting enters the column of largest reduced cost (smallest index on
ties); whenever a run of degenerate pivots gets long the rule falls back
to Bland's smallest-index rule until the objective moves again, which
rules out cycling while keeping the fast rule active almost always.

The result carries the dual values read off the optimal tableau, so
callers can verify an exact optimality certificate:

    primal feasible, y >= 0, A^T y >= c, and b.y == c.x.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)

_DEGENERATE_STREAK_LIMIT = 40


@dataclass(frozen=True)
class SimplexResult:
    status: str  # "optimal" | "unbounded" | "infeasible"
    objective: Fraction | None
    x: tuple[Fraction, ...] | None
    duals: tuple[Fraction, ...] | None


class _Tableau:
    """Constraint rows plus a reduced-cost row, kept consistent by pivots."""

    def __init__(
        self,
        rows: list[list[Fraction]],
        rhs: list[Fraction],
        basis: list[int],
        cost: list[Fraction],
    ):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.zrow = list(cost)
        self.zval = ZERO  # current objective value
        for i, bj in enumerate(basis):
            self._absorb(cost[bj], i)

    def _absorb(self, cb: Fraction, i: int):
        if cb:
            row = self.rows[i]
            self.zrow = [zk - cb * rk if rk else zk for zk, rk in zip(self.zrow, row)]
            self.zval += cb * self.rhs[i]

    def pivot(self, r: int, j: int):
        row = self.rows[r]
        piv = row[j]
        if piv != ONE:
            inv = ONE / piv
            self.rows[r] = row = [value * inv if value else value for value in row]
            self.rhs[r] *= inv
        rhs_r = self.rhs[r]
        for i in range(len(self.rows)):
            if i == r:
                continue
            factor = self.rows[i][j]
            if factor:
                other = self.rows[i]
                self.rows[i] = [
                    ok - factor * rk if rk else ok for ok, rk in zip(other, row)
                ]
                if rhs_r:
                    self.rhs[i] -= factor * rhs_r
        zfac = self.zrow[j]
        if zfac:
            self.zrow = [
                zk - zfac * rk if rk else zk for zk, rk in zip(self.zrow, row)
            ]
            self.zval += zfac * rhs_r
        self.basis[r] = j


def _optimize(t: _Tableau, max_pivots: int) -> str:
    """Run primal simplex on a feasible tableau; returns the status."""
    degenerate_streak = 0
    for _ in range(max_pivots):
        use_bland = degenerate_streak >= _DEGENERATE_STREAK_LIMIT
        enter = -1
        if use_bland:
            for j, rj in enumerate(t.zrow):
                if rj > 0:
                    enter = j
                    break
        else:
            best_rc = ZERO
            for j, rj in enumerate(t.zrow):
                if rj > best_rc:
                    best_rc = rj
                    enter = j
        if enter < 0:
            return "optimal"
        leave = -1
        best: Fraction | None = None
        for i, row in enumerate(t.rows):
            a = row[enter]
            if a > 0:
                ratio = t.rhs[i] / a
                if best is None or ratio < best or (
                    ratio == best and t.basis[i] < t.basis[leave]
                ):
                    best, leave = ratio, i
        if leave < 0:
            return "unbounded"
        degenerate_streak = degenerate_streak + 1 if best == 0 else 0
        t.pivot(leave, enter)
    raise RuntimeError("simplex failed to terminate within the pivot budget")


def simplex_max(
    c: Sequence[Fraction | int],
    a_rows: Sequence[Sequence[Fraction | int]],
    b: Sequence[Fraction | int],
    max_pivots: int = 100_000,
) -> SimplexResult:
    """Maximize c.x subject to a_rows.x <= b, x >= 0."""
    n = len(c)
    m = len(a_rows)
    cost_struct = [Fraction(v) for v in c]
    rhs = [Fraction(v) for v in b]
    rows: list[list[Fraction]] = []
    for i, coeffs in enumerate(a_rows):
        if len(coeffs) != n:
            raise ValueError(f"row {i} has {len(coeffs)} coefficients, expected {n}")
        row = [Fraction(v) for v in coeffs] + [ZERO] * m
        row[n + i] = ONE  # slack
        rows.append(row)

    basis = [n + i for i in range(m)]
    negative = [i for i in range(m) if rhs[i] < 0]
    flipped = bool(negative)
    if negative:
        # phase 1: flip infeasible rows, give them artificial basis columns
        for row in rows:
            row.extend([ZERO] * len(negative))
        for k, i in enumerate(negative):
            rows[i] = [-v for v in rows[i][: n + m]] + rows[i][n + m :]
            rhs[i] = -rhs[i]
            rows[i][n + m + k] = ONE
            basis[i] = n + m + k
        phase1_cost = [ZERO] * (n + m) + [Fraction(-1)] * len(negative)
        t = _Tableau(rows, rhs, basis, phase1_cost)
        status = _optimize(t, max_pivots)
        if status != "optimal":
            raise RuntimeError("phase 1 cannot be unbounded")
        if t.zval != 0:
            return SimplexResult("infeasible", None, None, None)
        # drive leftover artificials out of the basis, drop redundant rows
        keep: list[int] = []
        for i in range(len(t.basis)):
            if t.basis[i] < n + m:
                keep.append(i)
                continue
            pivot_col = next(
                (j for j in range(n + m) if t.rows[i][j] != 0), None
            )
            if pivot_col is None:
                continue  # redundant constraint
            t.pivot(i, pivot_col)
            keep.append(i)
        rows = [t.rows[i][: n + m] for i in keep]
        rhs = [t.rhs[i] for i in keep]
        basis = [t.basis[i] for i in keep]

    cost = cost_struct + [ZERO] * m
    t = _Tableau(rows, rhs, basis, cost)
    status = _optimize(t, max_pivots)
    if status == "unbounded":
        return SimplexResult("unbounded", None, None, None)

    x = [ZERO] * n
    for bj, value in zip(t.basis, t.rhs):
        if bj < n:
            x[bj] = value
    objective = sum((cj * xj for cj, xj in zip(cost_struct, x)), start=ZERO)
    if flipped:
        # row flips in phase 1 change the sign convention of their slack
        # columns; none of the models needing certificates go through here
        return SimplexResult("optimal", objective, tuple(x), None)
    duals = tuple(-t.zrow[n + i] for i in range(m))
    return SimplexResult("optimal", objective, tuple(x), duals)
