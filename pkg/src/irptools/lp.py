"""Exact rational linear and integer linear programming.

A small dense two-phase simplex over ``Fraction`` with Bland's
smallest-index rule (no cycling, fully deterministic), and a depth-first
branch-and-bound wrapper for integer programs.  No floating point anywhere:
returned points satisfy their constraints exactly and attain the returned
objective value exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .linalg import RatVector, dot, vec

LESS_EQ = "<="
GREATER_EQ = ">="
EQUAL = "=="

_RELATIONS = (LESS_EQ, GREATER_EQ, EQUAL)


@dataclass(frozen=True)
class LinearConstraint:
    coeffs: RatVector
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise InputError("bad-relation", f"unknown relation {self.relation!r}")


def constraint(coeffs, relation, rhs) -> LinearConstraint:
    return LinearConstraint(vec(coeffs), relation, Fraction(rhs))


@dataclass(frozen=True)
class LinearProgram:
    """``min/max <objective, x>`` subject to linear constraints.

    ``lower_bounds`` gives a per-variable lower bound; a ``None`` entry
    marks a free variable.  When omitted, every variable is bounded below
    by zero.
    """

    objective: RatVector
    constraints: tuple[LinearConstraint, ...]
    sense: str = "min"
    lower_bounds: tuple[Fraction | None, ...] | None = None

    def __post_init__(self):
        if self.sense not in ("min", "max"):
            raise InputError("bad-sense", f"unknown sense {self.sense!r}")
        n = len(self.objective)
        for c in self.constraints:
            if len(c.coeffs) != n:
                raise InputError(
                    "dimension-mismatch",
                    f"constraint has {len(c.coeffs)} coefficients, expected {n}",
                )
        if self.lower_bounds is not None and len(self.lower_bounds) != n:
            raise InputError("dimension-mismatch", "lower_bounds length mismatch")

    @property
    def num_vars(self) -> int:
        return len(self.objective)


def linear_program(objective, constraints, sense="min", lower_bounds=None) -> LinearProgram:
    cons = tuple(
        c if isinstance(c, LinearConstraint) else constraint(*c) for c in constraints
    )
    lbs = None
    if lower_bounds is not None:
        lbs = tuple(None if b is None else Fraction(b) for b in lower_bounds)
    return LinearProgram(vec(objective), cons, sense, lbs)


@dataclass(frozen=True)
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    point: RatVector | None = None


OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def lp_solve(lp: LinearProgram) -> LpResult:
    """Exact optimum of ``lp`` with a witnessing basic feasible point."""
    n = lp.num_vars
    minimize = lp.sense == "min"
    obj = list(lp.objective) if minimize else [-c for c in lp.objective]

    # Substitute x_j = x'_j + lb_j (x'_j >= 0); free variables are split
    # into a difference of two nonnegative parts.
    lbs = lp.lower_bounds if lp.lower_bounds is not None else tuple([Fraction(0)] * n)
    col_of: list[tuple[int, int | None]] = []  # (positive part col, negative part col)
    ncols = 0
    shift = []
    for j in range(n):
        if lbs[j] is None:
            col_of.append((ncols, ncols + 1))
            ncols += 2
            shift.append(Fraction(0))
        else:
            col_of.append((ncols, None))
            ncols += 1
            shift.append(Fraction(lbs[j]))

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    rels: list[str] = []
    for c in lp.constraints:
        row = [Fraction(0)] * ncols
        for j, a in enumerate(c.coeffs):
            pos, neg = col_of[j]
            row[pos] += a
            if neg is not None:
                row[neg] -= a
        rows.append(row)
        rhs.append(c.rhs - dot(c.coeffs, shift))
        rels.append(c.relation)

    obj_row = [Fraction(0)] * ncols
    for j, a in enumerate(obj):
        pos, neg = col_of[j]
        obj_row[pos] += a
        if neg is not None:
            obj_row[neg] -= a
    const_term = dot(obj, shift)

    status, value, point = _simplex(rows, rels, rhs, obj_row)
    if status != OPTIMAL:
        return LpResult(status)
    xs = []
    for j in range(n):
        pos, neg = col_of[j]
        val = point[pos] - (point[neg] if neg is not None else 0) + shift[j]
        xs.append(val)
    total = value + const_term
    if not minimize:
        total = -total
    return LpResult(OPTIMAL, total, tuple(xs))


def _simplex(rows, rels, rhs, obj_row):
    """Two-phase primal simplex, Bland's rule, on ``min obj_row . x`` with
    ``rows rel rhs`` and ``x >= 0``.  Returns (status, value, x)."""
    m = len(rows)
    n = len(obj_row)

    # slack/surplus columns, then normalize rhs >= 0
    tableau: list[list[Fraction]] = []
    slack_cols = 0
    slack_index: list[int | None] = []
    for rel in rels:
        slack_index.append(slack_cols if rel != EQUAL else None)
        if rel != EQUAL:
            slack_cols += 1
    width = n + slack_cols
    for i in range(m):
        row = list(rows[i]) + [Fraction(0)] * slack_cols
        if slack_index[i] is not None:
            row[n + slack_index[i]] = Fraction(1) if rels[i] == LESS_EQ else Fraction(-1)
        b = rhs[i]
        if b < 0:
            row = [-a for a in row]
            b = -b
        tableau.append(row + [b])

    # phase 1: artificial basis
    art_start = width
    for i in range(m):
        arts = [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        tableau[i] = tableau[i][:-1] + arts + [tableau[i][-1]]
    basis = [art_start + i for i in range(m)]
    total_width = art_start + m

    cost1 = [Fraction(0)] * total_width
    for k in range(m):
        cost1[art_start + k] = Fraction(1)
    z1 = _run_simplex(tableau, basis, cost1, total_width)
    if z1 is None:
        raise AssertionError("phase 1 cannot be unbounded")
    if z1 != 0:
        return INFEASIBLE, None, None

    # drive remaining artificials out of the basis
    for i in range(m):
        if basis[i] >= art_start:
            pivot_col = next(
                (j for j in range(art_start) if tableau[i][j] != 0), None
            )
            if pivot_col is None:
                continue  # redundant row
            _pivot(tableau, basis, i, pivot_col)

    cost2 = list(obj_row) + [Fraction(0)] * (total_width - width)
    z2 = _run_simplex(tableau, basis, cost2, art_start)
    if z2 is None:
        return UNBOUNDED, None, None
    x = [Fraction(0)] * width
    for i, b in enumerate(basis):
        if b < width:
            x[b] = tableau[i][-1]
    return OPTIMAL, z2, x


def _run_simplex(tableau, basis, cost, allowed_width):
    """Bland-rule simplex iterations; returns the optimal cost value or
    None when unbounded.  Only columns below ``allowed_width`` may enter."""
    m = len(tableau)
    while True:
        # reduced costs via the basis multipliers
        y = {}
        for i, b in enumerate(basis):
            y[i] = cost[b]
        entering = None
        for j in range(allowed_width):
            if j in basis:
                continue
            red = cost[j] - sum(y[i] * tableau[i][j] for i in range(m))
            if red < 0:
                entering = j
                break
        if entering is None:
            value = sum(cost[basis[i]] * tableau[i][-1] for i in range(m))
            return value
        ratio = None
        leave = None
        for i in range(m):
            a = tableau[i][entering]
            if a > 0:
                r = tableau[i][-1] / a
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                    ratio = r
                    leave = i
        if leave is None:
            return None
        _pivot(tableau, basis, leave, entering)


def _pivot(tableau, basis, row, col):
    prow = tableau[row]
    inv = Fraction(1) / prow[col]
    tableau[row] = prow = [a * inv for a in prow]
    for i in range(len(tableau)):
        if i != row and tableau[i][col] != 0:
            f = tableau[i][col]
            tableau[i] = [a - f * b for a, b in zip(tableau[i], prow)]
    basis[row] = col


def ilp_solve(lp: LinearProgram, bounds: list[tuple[int, int]] | None = None) -> LpResult:
    """Exact integer optimum by branch and bound over ``lp_solve`` relaxations.

    Branching is deterministic: lowest-index fractional variable, floor
    branch first, depth-first traversal.  ``bounds`` optionally boxes each
    variable; without it, an unbounded relaxation yields status
    ``unbounded``.
    """
    base_cons = list(lp.constraints)
    if bounds is not None:
        if len(bounds) != lp.num_vars:
            raise InputError("dimension-mismatch", "bounds length mismatch")
        for j, (lo, hi) in enumerate(bounds):
            unit = [Fraction(0)] * lp.num_vars
            unit[j] = Fraction(1)
            base_cons.append(LinearConstraint(tuple(unit), GREATER_EQ, Fraction(lo)))
            base_cons.append(LinearConstraint(tuple(unit), LESS_EQ, Fraction(hi)))

    minimize = lp.sense == "min"
    best: list = [None, None]  # value, point

    def better(v) -> bool:
        if best[0] is None:
            return True
        return v < best[0] if minimize else v > best[0]

    stack: list[tuple] = [tuple()]  # each entry: extra branching constraints
    while stack:
        extra = stack.pop()
        node = LinearProgram(
            lp.objective, tuple(base_cons) + extra, lp.sense, lp.lower_bounds
        )
        res = lp_solve(node)
        if res.status == UNBOUNDED:
            if bounds is None:
                return LpResult(UNBOUNDED)
            raise AssertionError("boxed relaxation cannot be unbounded")
        if res.status == INFEASIBLE:
            continue
        if best[0] is not None:
            if minimize and res.value >= best[0]:
                continue
            if not minimize and res.value <= best[0]:
                continue
        frac_var = next(
            (j for j, v in enumerate(res.point) if v.denominator != 1), None
        )
        if frac_var is None:
            if better(res.value):
                best[0] = res.value
                best[1] = res.point
            continue
        v = res.point[frac_var]
        floor_v = v.numerator // v.denominator
        unit = [Fraction(0)] * lp.num_vars
        unit[frac_var] = Fraction(1)
        down = LinearConstraint(tuple(unit), LESS_EQ, Fraction(floor_v))
        up = LinearConstraint(tuple(unit), GREATER_EQ, Fraction(floor_v + 1))
        # LIFO stack: push the ceil branch first so floor explores first
        stack.append(extra + (up,))
        stack.append(extra + (down,))

    if best[0] is None:
        return LpResult(INFEASIBLE)
    return LpResult(OPTIMAL, best[0], best[1])
