"""Exact rational linear programming.

Solves  min c.x  subject to  A x >= b, x >= 0  over the rationals with
a dense two-phase tableau simplex.  Bland's rule (smallest index for
both the entering and the leaving choice) guarantees termination and
makes the output deterministic.  Dimensions in this package are tiny,
so simplicity beats sparsity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    x: tuple | None = None


@dataclass(frozen=True)
class LinearProgram:
    """min c.x  s.t.  A x >= b,  x >= 0."""

    c: tuple
    A: tuple
    b: tuple

    def __post_init__(self):
        c = tuple(Fraction(v) for v in self.c)
        A = tuple(tuple(Fraction(v) for v in row) for row in self.A)
        b = tuple(Fraction(v) for v in self.b)
        if len(A) != len(b):
            raise ValueError("A and b dimensions disagree")
        if any(len(row) != len(c) for row in A):
            raise ValueError("A and c dimensions disagree")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)


def _pivot(tableau, obj, basis, row, col):
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    for i, r in enumerate(tableau):
        if i != row and r[col] != 0:
            factor = r[col]
            tableau[i] = [v - factor * w for v, w in zip(r, tableau[row])]
    if obj[col] != 0:
        factor = obj[col]
        obj[:] = [v - factor * w for v, w in zip(obj, tableau[row])]
    basis[row] = col


def _run_simplex(tableau, obj, basis, allowed):
    """Bland-rule simplex on a canonical tableau.  Returns OPTIMAL or
    UNBOUNDED; tableau/obj/basis are updated in place."""
    while True:
        col = next(
            (j for j in allowed if obj[j] < 0),
            None,
        )
        if col is None:
            return OPTIMAL
        row = None
        best = None
        for i, r in enumerate(tableau):
            if r[col] > 0:
                ratio = r[-1] / r[col]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    best, row = ratio, i
        if row is None:
            return UNBOUNDED
        _pivot(tableau, obj, basis, row, col)


def lp_solve(lp: LinearProgram) -> LPResult:
    """Exact two-phase simplex; deterministic for identical inputs."""
    m, n = len(lp.A), len(lp.c)
    if m == 0:
        # no constraints: optimum 0 at the origin unless some cost is negative
        if any(v < 0 for v in lp.c):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, Fraction(0), (Fraction(0),) * n)

    # equality form: A x - s = b, with rows flipped so rhs >= 0
    total = n + m  # structural + surplus
    tableau = []
    rhs_sign = []
    for i in range(m):
        row = list(lp.A[i]) + [Fraction(0)] * m + [lp.b[i]]
        row[n + i] = Fraction(-1)
        if lp.b[i] < 0:
            row = [-v for v in row]
            rhs_sign.append(-1)
        else:
            rhs_sign.append(1)
        tableau.append(row)

    # phase 1: artificial variables form the starting basis
    for i in range(m):
        for j, r in enumerate(tableau):
            r.insert(total + i, Fraction(1 if i == j else 0))
    basis = [total + i for i in range(m)]
    obj = [Fraction(0)] * (total + m + 1)
    for j in range(total + m + 1):
        obj[j] = -sum(r[j] for r in tableau)
    for i in range(m):
        obj[total + i] = Fraction(0)
    allowed = list(range(total))
    _run_simplex(tableau, obj, basis, allowed)
    if -obj[-1] != 0:
        return LPResult(INFEASIBLE)
    # drive remaining artificials out of the basis
    for i in range(m):
        if basis[i] >= total:
            col = next((j for j in range(total) if tableau[i][j] != 0), None)
            if col is not None:
                _pivot(tableau, obj, basis, i, col)
    # rows still basic in an artificial variable are redundant (all-zero)

    # phase 2: original objective expressed over the current basis
    cost = list(lp.c) + [Fraction(0)] * (2 * m)
    obj = cost + [Fraction(0)]
    for i, bi in enumerate(basis):
        if obj[bi] != 0:
            factor = obj[bi]
            obj = [v - factor * w for v, w in zip(obj, tableau[i])]
    status = _run_simplex(tableau, obj, basis, allowed)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = tableau[i][-1]
    return LPResult(OPTIMAL, -obj[-1], tuple(x))
