"""Exact certificates for integer rounding properties of clutter systems.

The package decides, with exact rational arithmetic throughout, whether the
linear system attached to a clutter rounds integrally in either direction,
and computes the companion objects: Hilbert bases and normality witnesses,
polytope vertices, canonical module generators, a-invariants, Gorenstein
and antiblocker checks, and the graph equivalence suite.
"""

__version__ = "0.1.0"

from .clutters import (
    Clutter,
    Graph,
    GraphPredicates,
    OddCycleConditionReport,
    closure_generators,
    disjoint_odd_cycle_condition,
    graph_predicates,
    incidence_matrix,
    is_perfect,
    maximal_cliques,
    maximal_independent_sets,
    odd_cycles,
)
from .canonical import (
    CanonicalPresentation,
    GorensteinVerdict,
    IdealGens,
    PerfectPresentation,
    a_invariant_direct,
    a_invariant_formula,
    antiblocker_check,
    canonical_generators,
    canonical_presentation,
    is_gorenstein,
    perfect_presentation,
)
from .errors import BudgetExceededError, InputError
from .graph_algebra import (
    EquivalenceReport,
    edge_cone_generators,
    equivalence_suite,
    extended_rees_generators,
    tdi_check,
)
from .linalg import RatMatrix, Rational, RatVector, solve_linear
from .lp import LinearConstraint, LinearProgram, LpResult, ilp_solve, linear_program, lp_solve
from .polyhedra import (
    ConeGens,
    HilbertBasis,
    NormalityReport,
    VertexSet,
    cone_gens,
    cone_member,
    dilation_lattice_points,
    hilbert_basis,
    is_normal_semigroup,
    polytope_vertices,
    semigroup_member,
)
from .rounding import (
    EhrhartReport,
    IrpVerdict,
    WitnessCertificate,
    closure_cone,
    ehrhart_equality,
    irp_geq,
    irp_leq,
    irp_witness_search,
    rees_cone,
)
