"""Exact linear programming over the rationals.

A small dense two-phase simplex with Bland's rule.  Everything runs on
``fractions.Fraction`` by default, so answers are exact and runs are
deterministic; no floating point is involved anywhere.  The arithmetic
is duck-typed: any ordered-field scalar with +, -, *, / and comparisons
works, which lets the character-sum bound reuse the solver over a real
quadratic extension field.

Problems are min or max of c.x subject to rows A_i.x {<=,>=,=} b_i with
all variables nonnegative.  That is the only variable domain the
package needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

__all__ = [
    "LPStatus",
    "LPResult",
    "LinearProgram",
    "solve_lp",
    "solve_linear_system",
]


class LPStatus(Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass
class LPResult:
    status: LPStatus
    value: object = None
    x: list = None


@dataclass
class LinearProgram:
    """min or max objective.x over x >= 0 subject to linear rows."""

    objective: list
    sense: str = "min"
    rows: list = field(default_factory=list)  # (coeffs, relation, rhs)

    def add(self, coeffs, relation: str, rhs) -> None:
        if relation not in ("<=", ">=", "="):
            raise ValueError(f"unknown relation {relation!r}")
        if len(coeffs) != len(self.objective):
            raise ValueError("coefficient count does not match variable count")
        self.rows.append((list(coeffs), relation, rhs))


def _pivot(tab: list, basis: list, row: int, col: int) -> None:
    piv = tab[row][col]
    tab[row] = [v / piv for v in tab[row]]
    for i, r in enumerate(tab):
        if i != row and r[col]:
            f = r[col]
            tab[i] = [v - f * w for v, w in zip(r, tab[row])]
    basis[row] = col


def _iterate(tab: list, basis: list, ncols: int, zero, on_step=None) -> str:
    """Run simplex steps on a tableau whose last row is the cost row.

    Returns "optimal" or "unbounded".  Bland's rule throughout: the
    entering column is the lowest-index one with a negative reduced
    cost, the leaving row minimises the ratio with ties broken by the
    smallest basic variable index.
    """
    m = len(tab) - 1
    cost = tab[m]
    while True:
        if on_step is not None:
            on_step()
        col = -1
        for j in range(ncols):
            if cost[j] < zero:
                col = j
                break
        if col < 0:
            return "optimal"
        best_row = -1
        best_ratio = None
        for i in range(m):
            a = tab[i][col]
            if a > zero:
                ratio = tab[i][-1] / a
                if (
                    best_row < 0
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[best_row])
                ):
                    best_row = i
                    best_ratio = ratio
        if best_row < 0:
            return "unbounded"
        _pivot(tab, basis, best_row, col)
        cost = tab[m]


def solve_lp(lp: LinearProgram, convert=Fraction, on_step=None) -> LPResult:
    """Solve exactly; x >= 0 is implicit for every variable.

    ``convert`` lifts plain numbers into the working field and is also
    applied to the supplied coefficients, so callers may mix ints with
    field scalars.  ``on_step``, when given, runs before every pivot;
    raising from it aborts the solve (time budgets use this hook).
    """
    zero = convert(0)
    one = convert(1)
    nvars = len(lp.objective)
    minimize = lp.sense == "min"
    if lp.sense not in ("min", "max"):
        raise ValueError(f"unknown sense {lp.sense!r}")

    rows = []
    for coeffs, relation, rhs in lp.rows:
        coeffs = [convert(c) for c in coeffs]
        rhs = convert(rhs)
        if rhs < zero:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
            relation = {"<=": ">=", ">=": "<=", "=": "="}[relation]
        rows.append((coeffs, relation, rhs))

    nslack = sum(1 for _, rel, _ in rows if rel != "=")
    nart = sum(1 for _, rel, _ in rows if rel != "<=")
    ncols = nvars + nslack + nart
    art_cols = []

    tab = []
    basis = []
    si = nvars
    ai = nvars + nslack
    for coeffs, relation, rhs in rows:
        row = [zero] * (ncols + 1)
        for j, c in enumerate(coeffs):
            row[j] = c
        row[-1] = rhs
        if relation == "<=":
            row[si] = one
            basis.append(si)
            si += 1
        elif relation == ">=":
            row[si] = -one
            si += 1
            row[ai] = one
            basis.append(ai)
            art_cols.append(ai)
            ai += 1
        else:
            row[ai] = one
            basis.append(ai)
            art_cols.append(ai)
            ai += 1
        tab.append(row)

    # Phase 1: minimise the artificial total.
    if art_cols:
        cost = [zero] * (ncols + 1)
        for j in art_cols:
            cost[j] = one
        for i, b in enumerate(basis):
            if b in art_cols:
                cost = [c - v for c, v in zip(cost, tab[i])]
        tab.append(cost)
        _iterate(tab, basis, ncols, zero, on_step)
        if tab[-1][-1] < zero:  # cost row holds -(phase objective)
            tab.pop()
            return LPResult(LPStatus.INFEASIBLE)
        tab.pop()
        # Drive leftover artificials out of the basis.
        art_set = set(art_cols)
        drop = []
        for i in range(len(tab)):
            if basis[i] in art_set:
                piv_col = next(
                    (j for j in range(nvars + nslack) if tab[i][j] != zero), -1
                )
                if piv_col < 0:
                    drop.append(i)
                else:
                    _pivot(tab, basis, i, piv_col)
        for i in reversed(drop):
            tab.pop(i)
            basis.pop(i)
        for row in tab:
            for j in art_cols:
                row[j] = zero

    # Phase 2 on the real objective, as a minimisation.
    obj = [convert(c) for c in lp.objective]
    if not minimize:
        obj = [-c for c in obj]
    cost = [zero] * (ncols + 1)
    for j, c in enumerate(obj):
        cost[j] = c
    for i, b in enumerate(basis):
        if b < nvars and obj[b] != zero:
            f = obj[b]
            cost = [c - f * v for c, v in zip(cost, tab[i])]
    tab.append(cost)
    outcome = _iterate(tab, basis, nvars + nslack, zero, on_step)
    if outcome == "unbounded":
        return LPResult(LPStatus.UNBOUNDED)

    x = [zero] * nvars
    for i, b in enumerate(basis):
        if b < nvars:
            x[b] = tab[i][-1]
    value = -tab[-1][-1] if minimize else tab[-1][-1]

    # Defensive exact re-check of the reported point.  In both senses
    # the user-facing objective coefficients are obj negated back for
    # max, and the dot product must reproduce the reported value.
    user_obj = obj if minimize else [-c for c in obj]
    check = zero
    for c, v in zip(user_obj, x):
        check = check + c * v
    if check != value:
        raise ArithmeticError("objective mismatch after solve")
    for coeffs, relation, rhs in rows:
        lhs = zero
        for c, v in zip(coeffs, x):
            lhs = lhs + c * v
        ok = (
            lhs <= rhs
            if relation == "<="
            else lhs >= rhs if relation == ">=" else lhs == rhs
        )
        if not ok:
            raise ArithmeticError("constraint violated after solve")
    return LPResult(LPStatus.OPTIMAL, value, x)


def solve_linear_system(matrix, rhs, convert=Fraction):
    """Solve a square system exactly by Gaussian elimination.

    Raises ``ArithmeticError`` when the matrix is singular.
    """
    n = len(matrix)
    if any(len(r) != n for r in matrix) or len(rhs) != n:
        raise ValueError("system is not square")
    zero = convert(0)
    aug = [[convert(v) for v in row] + [convert(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != zero), -1)
        if piv < 0:
            raise ArithmeticError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        lead = aug[col][col]
        aug[col] = [v / lead for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != zero:
                f = aug[i][col]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[col])]
    return [aug[i][-1] for i in range(n)]
