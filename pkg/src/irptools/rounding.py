"""Integer rounding property deciders and their definitional falsifiers.

The deciders are normality checks on lifted generator cones (sound and
complete).  The witness search is the definitional oracle: it hunts for an
integral right-hand side on which the rounded linear optimum and the integer
optimum disagree.  Both routes are exact and cross-checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .clutters import Clutter, closure_generators
from .errors import BudgetExceededError, InputError
from .linalg import IntVector, RatMatrix
from .polyhedra import (
    ConeGens,
    NormalityReport,
    cone_gens,
    dilation_lattice_points,
    is_normal_semigroup,
    semigroup_member,
    _vertices_of_system,
)

LEQ = "leq"
GEQ = "geq"


@dataclass(frozen=True)
class WitnessCertificate:
    """A right-hand side on which rounding the linear optimum fails."""

    direction: str
    alpha: IntVector
    lp_value: Fraction
    rounded: int
    ilp_value: int


@dataclass(frozen=True)
class IrpVerdict:
    holds: bool
    method: str  # "normality" | "witness"
    certificate: IntVector | WitnessCertificate | None = None


def closure_cone(c: Clutter) -> ConeGens:
    """Lifted cone on the dominated-vector closure of the clutter."""
    return cone_gens([w + (1,) for w in closure_generators(c)], c.n + 1)


def rees_cone(c: Clutter) -> ConeGens:
    """Cone on the unit vectors at height zero plus the lifted columns."""
    units = [
        tuple(1 if j == i else 0 for j in range(c.n)) + (0,) for i in range(c.n)
    ]
    cols = [v + (1,) for v in c.columns()]
    return cone_gens(units + cols, c.n + 1)


def irp_leq(c: Clutter) -> IrpVerdict:
    """Rounding property of ``x >= 0; x A <= 1``: holds exactly when the
    lifted closure cone is a normal semigroup."""
    rep = is_normal_semigroup(closure_cone(c))
    return IrpVerdict(rep.normal, "normality", rep.witness)


def irp_geq(c: Clutter) -> IrpVerdict:
    """Rounding property of ``x >= 0; x A >= 1``: holds exactly when the
    Rees cone is a normal semigroup."""
    rep = is_normal_semigroup(rees_cone(c))
    return IrpVerdict(rep.normal, "normality", rep.witness)


def _int_columns(a: RatMatrix) -> list[IntVector]:
    cols = []
    for j in range(a.cols):
        col = a.column(j)
        if any(e.denominator != 1 or e < 0 for e in col):
            raise InputError("bad-matrix", "columns must be nonnegative integers")
        cols.append(tuple(int(e) for e in col))
    return cols


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _min_cover(columns: list[IntVector], alpha: IntVector) -> int:
    """Exact minimum of ``<1, y>`` over integer ``y >= 0`` with
    ``sum y_j col_j >= alpha`` (branching on the most demanding row)."""
    n = len(alpha)
    best_possible: dict[IntVector, int] = {}

    def bound(residual: IntVector) -> int:
        worst = max(residual)
        if worst <= 0:
            return 0
        total = sum(e for e in residual if e > 0)
        heaviest = max(sum(col) for col in columns)
        return max(worst, -(-total // heaviest))

    def search(residual: IntVector, budget_left: int) -> int | None:
        """Least number of additional picks, or None if > budget_left."""
        if all(e <= 0 for e in residual):
            return 0
        if bound(residual) > budget_left:
            return None
        cached = best_possible.get(residual)
        if cached is not None and cached > budget_left:
            return None
        row = max(range(n), key=lambda i: residual[i])
        best: int | None = None
        for col in columns:
            if col[row] == 0:
                continue
            nxt = tuple(max(a - b, 0) for a, b in zip(residual, col))
            inner_budget = budget_left - 1 if best is None else best - 2
            sub = search(nxt, inner_budget)
            if sub is not None and (best is None or sub + 1 < best):
                best = sub + 1
        if best is None:
            best_possible[residual] = budget_left + 1
        return best

    # any row is coverable: pick its own covering column repeatedly
    upper = sum(max(e, 0) for e in alpha)
    clipped = tuple(max(e, 0) for e in alpha)
    result = search(clipped, upper)
    if result is None:
        raise AssertionError("cover search must succeed within its upper bound")
    return result


def _max_pack(columns: list[IntVector], w: IntVector) -> int:
    """Exact maximum of ``<1, y>`` over integer ``y >= 0`` with
    ``sum y_j col_j <= w``."""
    q = len(columns)
    lightest = min(sum(col) for col in columns)

    def search(j: int, capacity: IntVector, acc: int, best: int) -> int:
        if j == q:
            return max(best, acc)
        remaining = sum(capacity)
        if acc + remaining // lightest <= best:
            return best
        col = columns[j]
        top = min(
            (capacity[i] // col[i] for i in range(len(w)) if col[i] > 0),
            default=0,
        )
        for count in range(top, -1, -1):
            nxt = tuple(c - count * e for c, e in zip(capacity, col))
            best = search(j + 1, nxt, acc + count, best)
        return best

    return search(0, tuple(w), 0, 0)


def irp_witness_search(
    a: RatMatrix,
    direction: str,
    window: int,
    budget: int | None = None,
) -> WitnessCertificate | None:
    """First integral vector in the window (lexicographic order) violating
    the rounding identity, or None.

    The linear optimum is evaluated by strong duality against the exactly
    enumerated vertex set of the dual polyhedron, the integer optimum by
    exhaustive branch-and-bound; a None result certifies only the searched
    window, which callers must report.
    """
    if window < 1:
        raise InputError("bad-parameter", "window must be at least 1")
    if direction not in (LEQ, GEQ):
        raise InputError("bad-parameter", f"unknown direction {direction!r}")
    columns = _int_columns(a)
    n = a.rows
    if any(all(e == 0 for e in col) for col in columns):
        raise InputError("bad-matrix", "zero column")
    for i in range(n):
        if all(col[i] == 0 for col in columns):
            raise InputError("isolated-vertex", f"coordinate {i} occurs in no column")
    rational_cols = [tuple(Fraction(e) for e in col) for col in columns]
    dual_sense = "<=" if direction == LEQ else ">="
    dual_vertices = _vertices_of_system(rational_cols, n, dual_sense, budget=budget)
    count = 0
    for alpha in product(range(window + 1), repeat=n):
        count += 1
        if budget is not None and count > budget:
            raise BudgetExceededError("witness window budget exceeded")
        if all(e == 0 for e in alpha):
            continue  # both sides vanish at the origin
        if direction == LEQ:
            lp_value = max(
                (sum(Fraction(x) * v for x, v in zip(alpha, vert)) for vert in dual_vertices),
                default=Fraction(0),
            )
            rounded = _ceil(lp_value)
            ilp_value = _min_cover(columns, alpha)
        else:
            lp_value = min(
                sum(Fraction(x) * v for x, v in zip(alpha, vert)) for vert in dual_vertices
            )
            rounded = _floor(lp_value)
            ilp_value = _max_pack(columns, alpha)
        if rounded != ilp_value:
            return WitnessCertificate(direction, alpha, lp_value, rounded, ilp_value)
    return None


@dataclass(frozen=True)
class EhrhartReport:
    equal_up_to_b: bool
    b_max: int
    failing_b: int | None = None
    failing_point: IntVector | None = None


def ehrhart_equality(c: Clutter, b_max: int, budget: int | None = None) -> EhrhartReport:
    """Check degree by degree that every lattice point of the dilated column
    polytope is a sum of that many columns.

    Only defined for uniform clutters (all edges the same size)."""
    if b_max < 1:
        raise InputError("bad-parameter", "b_max must be at least 1")
    if not c.is_uniform():
        raise InputError("not-uniform", "edge sizes differ; the comparison needs a uniform clutter")
    columns = c.columns()
    lifted = cone_gens([col + (1,) for col in columns], c.n + 1)
    for b in range(1, b_max + 1):
        for z in dilation_lattice_points(columns, b, budget=budget):
            if semigroup_member(lifted, tuple(z) + (b,)) is None:
                return EhrhartReport(False, b_max, b, tuple(z))
    return EhrhartReport(True, b_max)
