"""Canonical module presentations, minimal generators, a-invariants,
Gorenstein and antiblocker checks.

For a normal lifted-closure cone, the interior lattice points form the
(monomial) canonical module; its presentation is cut out by the nonzero
vertices of the associated polytope together with the coordinate
halfspaces.  Minimal generators are found among the lattice points of the
closed fundamental parallelepipeds of a triangulation: subtracting a
simplex generator from an interior point with a coefficient above one
stays interior, so deeper points are never minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .clutters import (
    Clutter,
    Graph,
    closure_generators,
    is_perfect,
    maximal_independent_sets,
)
from .errors import InputError
from .linalg import IntVector, RatVector, vec
from .lp import EQUAL, OPTIMAL, linear_program, lp_solve
from .polyhedra import (
    ConeGens,
    VertexSet,
    _ConeGeometry,
    _vertices_of_system,
)

STRICT_POSITIVE = "strict-positive"  # <normal, z> > 0 for every normal
AT_LEAST_ONE = "at-least-one"  # <normal, z> >= 1 for every normal


@dataclass(frozen=True)
class CanonicalPresentation:
    """Inequality system cutting out the interior lattice points.

    ``normals`` lists, in order, one column ``(-l, 1)`` per nonzero vertex
    ``l`` and then the coordinate columns ``(e_j, 0)``.  Integral points
    satisfying every inequality (strictly, or with threshold one --- the
    two agree on integer data) are exactly the module's monomials.
    """

    n: int
    normals: tuple[RatVector, ...]
    mode: str = STRICT_POSITIVE

    def __post_init__(self):
        if self.mode not in (STRICT_POSITIVE, AT_LEAST_ONE):
            raise InputError("bad-parameter", f"unknown mode {self.mode!r}")
        for normal in self.normals:
            if len(normal) != self.n + 1:
                raise InputError("dimension-mismatch", "normals live in dimension n+1")

    @property
    def vertex_normals(self) -> tuple[RatVector, ...]:
        return tuple(nrm for nrm in self.normals if nrm[self.n] != 0)

    @property
    def vertices(self) -> tuple[RatVector, ...]:
        """The nonzero polytope vertices encoded in the normals."""
        return tuple(
            tuple(-e for e in nrm[: self.n]) for nrm in self.vertex_normals
        )

    def is_interior(self, point) -> bool:
        """Exact test of the inequality system on an integer point."""
        for normal in self.normals:
            value = sum(Fraction(a) * b for a, b in zip(point, normal))
            if self.mode == STRICT_POSITIVE:
                if value <= 0:
                    return False
            else:
                if value < 1:
                    return False
        return True


def canonical_presentation(vertices: VertexSet) -> CanonicalPresentation:
    """Build the strict inequality system from a polytope vertex set.

    Valid when the underlying system has the rounding property, so the
    lifted closure cone is normal and its facets are exactly these
    halfspaces.
    """
    nonzero = vertices.nonzero
    if not nonzero:
        raise InputError("degenerate-polytope", "no nonzero vertices")
    n = len(nonzero[0])
    normals = [tuple(-e for e in ell) + (Fraction(1),) for ell in nonzero]
    normals += [
        tuple(Fraction(1 if j == i else 0) for j in range(n)) + (Fraction(0),)
        for i in range(n)
    ]
    return CanonicalPresentation(n, tuple(normals))


@dataclass(frozen=True)
class IdealGens:
    """Minimal monomial generators (a, b) of the interior-point module."""

    generators: tuple[tuple[IntVector, int], ...]
    complete_up_to: int
    complete: bool


def default_degree_bound(pres: CanonicalPresentation) -> int:
    total = max(
        (sum(ell) for ell in pres.vertices),
        default=Fraction(0),
    )
    return (pres.n + 1) + (total.numerator // total.denominator)


def canonical_generators(
    pres: CanonicalPresentation,
    cone: ConeGens,
    b_max: int | None = None,
) -> IdealGens:
    """All minimal generators of the interior-point module with degree at
    most ``b_max``.

    Candidates come from the closed fundamental parallelepipeds of a
    triangulation of ``cone`` (a complete superset of the minimal
    generators); each candidate is kept when subtracting any single cone
    generator leaves the interior.  ``complete`` is exact: it records
    whether every minimal generator (of any degree) fell inside ``b_max``.
    """
    if cone.dim != pres.n + 1:
        raise InputError("dimension-mismatch", "cone and presentation disagree")
    if b_max is None:
        b_max = default_degree_bound(pres)
    geom = _ConeGeometry(cone)
    if geom.tri.k != cone.dim:
        raise InputError("bad-cone", "the lifted cone must be full dimensional")
    candidates: set[IntVector] = set()
    for simplex in geom.tri.simplices:
        gens = [geom.hat[i] for i in simplex]
        half_open = geom.parallelepiped_points(simplex)
        corners = [tuple([0] * cone.dim)] + list(half_open)
        k = len(gens)
        for base in corners:
            stack = [(0, base)]
            while stack:
                idx, point = stack.pop()
                if idx == k:
                    candidates.add(point)
                    continue
                stack.append((idx + 1, point))
                shifted = tuple(a + b for a, b in zip(point, gens[idx]))
                stack.append((idx + 1, shifted))
    minimal: list[tuple[IntVector, int]] = []
    max_degree_seen = 0
    for cand in sorted(candidates):
        point = geom.from_hat(cand)
        if not pres.is_interior(point):
            continue
        if any(
            pres.is_interior(tuple(a - b for a, b in zip(point, g)))
            for g in cone.generators
        ):
            continue
        a_part = point[: pres.n]
        degree = point[pres.n]
        max_degree_seen = max(max_degree_seen, degree)
        minimal.append((a_part, degree))
    generators = tuple(
        sorted(((a, b) for a, b in minimal if b <= b_max), key=lambda g: (g[1], g[0]))
    )
    complete = all(b <= b_max for _, b in minimal)
    return IdealGens(generators, b_max, complete)


def a_invariant_formula(vertices: VertexSet) -> int:
    """Negated one-plus-max of the floored coordinate sums of the nonzero
    vertices."""
    nonzero = vertices.nonzero
    if not nonzero:
        raise InputError("degenerate-polytope", "no nonzero vertices")
    best = max(sum(v) for v in nonzero)
    return -(best.numerator // best.denominator + 1)


def a_invariant_direct(pres: CanonicalPresentation, cone: ConeGens) -> int:
    """Negated least degree of an interior lattice point, by ascending
    search.

    Termination: the all-ones point is interior at one plus the maximal
    floored vertex sum, so the search never runs past that degree.
    """
    bound = -a_invariant_formula_from_pres(pres)
    verts = pres.vertices
    n = pres.n
    for b in range(1, bound + 1):
        if _interior_point_exists_at_degree(verts, n, b, pres.mode):
            return -b
    raise AssertionError("ascending search must find an interior point")


def a_invariant_formula_from_pres(pres: CanonicalPresentation) -> int:
    best = max(sum(ell) for ell in pres.vertices)
    return -(best.numerator // best.denominator + 1)


def _interior_point_exists_at_degree(verts, n: int, b: int, mode: str) -> bool:
    """Backtracking search for integral a >= 1 with <a, l> below b for
    every vertex l (strict, or by a margin of one in threshold mode)."""

    def margin_ok(total: Fraction) -> bool:
        if mode == STRICT_POSITIVE:
            return total < b
        return total <= b - 1

    totals = [Fraction(0)] * len(verts)
    mins = []  # minimal completion of coordinates j.. for each vertex
    for ell in verts:
        suffix = [Fraction(0)] * (n + 1)
        for j in range(n - 1, -1, -1):
            suffix[j] = suffix[j + 1] + ell[j]
        mins.append(suffix)

    def assign(j: int) -> bool:
        if j == n:
            return all(margin_ok(t) for t in totals)
        value = 1
        while True:
            # margins are monotone in value (vertices are nonnegative), so
            # the first failure kills every larger value as well
            if any(
                not margin_ok(totals[idx] + ell[j] * value + mins[idx][j + 1])
                for idx, ell in enumerate(verts)
            ):
                return False
            for idx, ell in enumerate(verts):
                totals[idx] += ell[j] * value
            if assign(j + 1):
                return True
            for idx, ell in enumerate(verts):
                totals[idx] -= ell[j] * value
            if all(ell[j] == 0 for ell in verts):
                return False  # unconstrained coordinate, larger values repeat
            value += 1

    return assign(0)


@dataclass(frozen=True)
class GorensteinVerdict:
    gorenstein: bool
    qualified: bool
    num_generators: int


def is_gorenstein(gens: IdealGens) -> GorensteinVerdict:
    """Principality of the module: exactly one minimal generator.

    ``qualified`` is false when the degree scan was truncated, in which
    case the verdict only covers the scanned degrees.
    """
    return GorensteinVerdict(
        gorenstein=len(gens.generators) == 1,
        qualified=gens.complete,
        num_generators=len(gens.generators),
    )


@dataclass(frozen=True)
class PerfectPresentation:
    pres: CanonicalPresentation
    a_invariant: int
    independent_sets: tuple[IntVector, ...]


def perfect_presentation(g: Graph) -> PerfectPresentation:
    """Threshold presentation for the clique subring of a perfect graph.

    The vertex role is played by the characteristic vectors of the maximal
    independent sets; the a-invariant is minus one minus the independence
    number.
    """
    if not is_perfect(g):
        raise InputError("not-perfect", "the presentation needs a perfect graph")
    sets = maximal_independent_sets(g)
    vectors = [
        tuple(1 if i in s else 0 for i in range(g.n)) for s in sets
    ]
    n = g.n
    normals = [tuple(Fraction(-e) for e in a) + (Fraction(1),) for a in vectors]
    normals += [
        tuple(Fraction(1 if j == i else 0) for j in range(n)) + (Fraction(0),)
        for i in range(n)
    ]
    pres = CanonicalPresentation(n, tuple(normals), AT_LEAST_ONE)
    a_inv = -(max(sum(a) for a in vectors) + 1)
    return PerfectPresentation(pres, a_inv, tuple(vectors))


def antiblocker_check(c: Clutter, vertices: VertexSet, budget: int | None = None) -> bool:
    """Verify the duality between the closure hull and the vertex system.

    Checks (i) every closure vector satisfies every vertex inequality and
    (ii) every vertex of ``{x >= 0 : <x, l> <= 1}`` is a convex combination
    of the closure vectors, both exactly."""
    ws = closure_generators(c)
    nonzero = vertices.nonzero
    for w in ws:
        for ell in nonzero:
            if sum(Fraction(a) * b for a, b in zip(w, ell)) > 1:
                return False
    dual_vertices = _vertices_of_system(list(nonzero), c.n, "<=", budget=budget)
    r = len(ws)
    for v in dual_vertices:
        cons = []
        for i in range(c.n):
            cons.append(([w[i] for w in ws], EQUAL, v[i]))
        cons.append(([1] * r, EQUAL, 1))
        lp = linear_program([0] * r, cons)
        if lp_solve(lp).status != OPTIMAL:
            return False
    return True
