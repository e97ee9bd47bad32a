"""Graph-specific cone constructions and the equivalence suite.

For a connected graph, six conditions are equivalent: both rounding
properties, normality of the Rees cone, of the lifted edge cone, and of the
extended Rees cone, and the disjoint odd cycle condition.  The suite runs
all six checkers independently and reports whether they agree; disagreement
would mean a bug in one of them, never a property of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .clutters import (
    Graph,
    OddCycleConditionReport,
    disjoint_odd_cycle_condition,
    incidence_matrix,
    is_connected,
    is_perfect,
)
from .errors import InputError
from .linalg import IntVector
from .lp import GREATER_EQ, OPTIMAL, ilp_solve, linear_program, lp_solve
from .polyhedra import ConeGens, cone_gens, is_normal_semigroup
from .rounding import IrpVerdict, irp_geq, irp_leq, rees_cone


def extended_rees_generators(g: Graph) -> ConeGens:
    """Generators of the extended Rees cone: the origin, every unit vector,
    and every edge vector, all lifted to height one.

    As a set this equals the lifted closure of the graph's edge clutter.
    """
    n = g.n
    gens: list[IntVector] = [tuple([0] * n) + (1,)]
    gens += [tuple(1 if j == i else 0 for j in range(n)) + (1,) for i in range(n)]
    gens += [v + (1,) for v in g.edge_clutter().columns()]
    return cone_gens(gens, n + 1)


def edge_cone_generators(g: Graph) -> ConeGens:
    """Generators of the lifted edge cone: the edge vectors at height one."""
    return cone_gens([v + (1,) for v in g.edge_clutter().columns()], g.n + 1)


@dataclass(frozen=True)
class EquivalenceReport:
    irp_leq: IrpVerdict
    irp_geq: IrpVerdict
    rees_normal: bool
    edge_normal: bool
    extended_rees_normal: bool
    odd_cycle_condition: OddCycleConditionReport

    @property
    def verdicts(self) -> tuple[bool, bool, bool, bool, bool, bool]:
        return (
            self.irp_leq.holds,
            self.irp_geq.holds,
            self.rees_normal,
            self.edge_normal,
            self.extended_rees_normal,
            self.odd_cycle_condition.holds,
        )

    @property
    def consistent(self) -> bool:
        return len(set(self.verdicts)) == 1

    @property
    def all_hold(self) -> bool:
        return all(self.verdicts)


def equivalence_suite(g: Graph, budget: int | None = None) -> EquivalenceReport:
    """Run the six equivalent checkers on a connected graph."""
    if not is_connected(g):
        raise InputError("not-connected", "the equivalence suite needs a connected graph")
    clutter = g.edge_clutter()
    return EquivalenceReport(
        irp_leq=irp_leq(clutter),
        irp_geq=irp_geq(clutter),
        rees_normal=is_normal_semigroup(rees_cone(clutter)).normal,
        edge_normal=is_normal_semigroup(edge_cone_generators(g)).normal,
        extended_rees_normal=is_normal_semigroup(extended_rees_generators(g)).normal,
        odd_cycle_condition=disjoint_odd_cycle_condition(g, budget=budget),
    )


def tdi_check(g: Graph, alpha) -> bool:
    """Check one right-hand side of total dual integrality for the maximal
    clique system of a perfect graph: the covering optimum must be attained
    by an integral solution (integer optimum equals the linear optimum)."""
    if not is_perfect(g):
        raise InputError("not-perfect", "the clique system check needs a perfect graph")
    alpha = tuple(int(e) for e in alpha)
    if len(alpha) != g.n:
        raise InputError("dimension-mismatch", "alpha has wrong length")
    clutter = g.clique_clutter()
    a = incidence_matrix(clutter)
    q = clutter.q
    cons = []
    for i in range(g.n):
        cons.append(([int(a.at(i, j)) for j in range(q)], GREATER_EQ, alpha[i]))
    lp = linear_program([1] * q, cons)
    relaxed = lp_solve(lp)
    if relaxed.status != OPTIMAL:
        raise InputError("bad-parameter", "covering program must have a finite optimum")
    box_top = sum(max(e, 0) for e in alpha)
    integral = ilp_solve(lp, bounds=[(0, box_top)] * q)
    if integral.status != OPTIMAL:
        raise InputError("bad-parameter", "integer covering program must be feasible")
    return integral.value == relaxed.value
