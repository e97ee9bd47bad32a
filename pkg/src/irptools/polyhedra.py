"""Exact polyhedral computations.

Vertex enumeration by basis enumeration, pointed-cone triangulation with
half-open parallelepiped lattice point enumeration (the Hilbert basis
candidate set), semigroup membership by memoized subtraction, normality
checking, and lattice points of polytope dilations.  Everything is exact;
enumerations emit lexicographically sorted output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import BudgetExceededError, InputError
from .linalg import (
    IntVector,
    LatticeCoords,
    RatMatrix,
    RatVector,
    column_hermite,
    int_det,
    primitive_kernel_vector,
    rational_rank,
    saturation_basis,
    solve_linear,
    vec,
)
from .lp import EQUAL, GREATER_EQ, OPTIMAL, linear_program, lp_solve


@dataclass(frozen=True)
class ConeGens:
    """A pointed rational cone given by nonzero integer generators with
    nonnegative entries."""

    dim: int
    generators: tuple[IntVector, ...]

    def __post_init__(self):
        if self.dim <= 0:
            raise InputError("bad-shape", "cone dimension must be positive")
        if not self.generators:
            raise InputError("bad-cone", "cone needs at least one generator")
        for g in self.generators:
            if len(g) != self.dim:
                raise InputError("dimension-mismatch", f"generator {g} has wrong length")
            if any(not isinstance(e, int) for e in g):
                raise InputError("not-integral", f"generator {g} is not integral")
            if any(e < 0 for e in g):
                raise InputError(
                    "not-nonnegative",
                    f"generator {g} leaves the nonnegative orthant (cone must be pointed)",
                )
            if all(e == 0 for e in g):
                raise InputError("bad-cone", "zero vector is not a valid generator")


def cone_gens(vectors, dim: int | None = None) -> ConeGens:
    vectors = [tuple(int(e) for e in v) for v in vectors]
    if dim is None:
        dim = len(vectors[0]) if vectors else 0
    return ConeGens(dim, tuple(vectors))


@dataclass(frozen=True)
class HilbertBasis:
    elements: tuple[IntVector, ...]


@dataclass(frozen=True)
class VertexSet:
    """Vertices of a polyhedron of the form x >= 0, <x, r_j> (<=|>=) 1."""

    vertices: tuple[RatVector, ...]
    contains_origin: bool

    @property
    def nonzero(self) -> tuple[RatVector, ...]:
        return tuple(v for v in self.vertices if any(e != 0 for e in v))


# ---------------------------------------------------------------------------
# Vertex enumeration


def _vertices_of_system(
    rows: list[RatVector],
    n: int,
    sense: str,
    budget: int | None = None,
    subset_iterator=None,
) -> list[RatVector]:
    """Vertices of ``{x >= 0 : <x, r> sense 1 for r in rows}``.

    Basis enumeration: choose a zero set Z of coordinates and a matching
    count of constraint rows; solve the restricted square system exactly and
    keep the feasible solutions.  ``subset_iterator`` exists so tests can
    drive the same feasibility/solve path with an alternative enumeration
    order.
    """
    if any(all(e == 0 for e in r) for r in rows):
        if sense == "<=":
            raise InputError("unbounded-polytope", "zero constraint row leaves a free direction")
        return []

    def default_iterator():
        coords = tuple(range(n))
        for free_count in range(0, n + 1):
            for free in combinations(coords, free_count):
                # distinct restrictions only: repeating a value is singular,
                # equal values give the same basic solution
                seen: dict[tuple, tuple] = {}
                for r in rows:
                    restriction = tuple(r[i] for i in free)
                    if any(e != 0 for e in restriction):
                        seen.setdefault(restriction, r)
                for chosen in combinations(sorted(seen), free_count):
                    yield free, chosen

    iterator = subset_iterator() if subset_iterator is not None else default_iterator()
    found: set[RatVector] = set()
    work = 0
    for free, restrictions in iterator:
        work += 1
        if budget is not None and work > budget:
            raise BudgetExceededError("vertex enumeration budget exceeded")
        f = len(free)
        if f == 0:
            candidate = tuple(Fraction(0) for _ in range(n))
        else:
            mat = RatMatrix.from_rows([list(r) for r in restrictions])
            sol = solve_linear(mat, tuple(Fraction(1) for _ in range(f)))
            if sol is None:
                continue
            candidate_list = [Fraction(0)] * n
            for idx, coord in enumerate(free):
                candidate_list[coord] = sol[idx]
            candidate = tuple(candidate_list)
        if any(e < 0 for e in candidate):
            continue
        ok = True
        for r in rows:
            val = sum(a * b for a, b in zip(candidate, r))
            if sense == "<=" and val > 1:
                ok = False
                break
            if sense == ">=" and val < 1:
                ok = False
                break
        if ok:
            found.add(candidate)
    return sorted(found)


def polytope_vertices(a: RatMatrix, budget: int | None = None) -> VertexSet:
    """Complete vertex set of ``{x >= 0 : x A <= 1}`` for a 0/1 matrix with
    no zero rows (so the polytope is bounded); includes the origin."""
    for e in a.entries:
        if e != 0 and e != 1:
            raise InputError("bad-matrix", "incidence matrix entries must be 0 or 1")
    for i in range(a.rows):
        if all(a.at(i, j) == 0 for j in range(a.cols)):
            raise InputError(
                "unbounded-polytope", f"row {i} is zero, the polytope is unbounded"
            )
    rows = [a.column(j) for j in range(a.cols)]
    verts = _vertices_of_system(rows, a.rows, "<=", budget=budget)
    origin = tuple(Fraction(0) for _ in range(a.rows))
    return VertexSet(tuple(verts), origin in verts)


# ---------------------------------------------------------------------------
# Cone triangulation


class _Triangulation:
    """Placing triangulation of a full-dimensional pointed cone.

    Generators are inserted in order; each generator outside the current
    cone is joined to the visible boundary facets.  The resulting boundary
    facets provide an exact inward-normal description of the cone.
    """

    def __init__(self, gens: list[IntVector]):
        self.k = len(gens[0])
        self.gens = gens
        self.simplices: list[tuple[int, ...]] = []
        self._facet_count: dict[frozenset[int], int] = {}
        self._facet_owner: dict[frozenset[int], tuple[int, ...]] = {}
        self._normal_cache: dict[frozenset[int], IntVector] = {}
        self._build()

    def _build(self):
        k = self.k
        init: list[int] = []
        work: list = []
        for i, g in enumerate(self.gens):
            trial = work + [g]
            if rational_rank(trial) == len(trial):
                work = trial
                init.append(i)
                if len(init) == k:
                    break
        if len(init) < k:
            raise InputError("bad-cone", "generators do not span the expected space")
        self._add_simplex(tuple(init))
        placed = set(init)
        for i in range(len(self.gens)):
            if i in placed:
                continue
            self._place(i)
            placed.add(i)

    def _add_simplex(self, simplex: tuple[int, ...]):
        self.simplices.append(simplex)
        for omit in simplex:
            facet = frozenset(simplex) - {omit}
            self._facet_count[facet] = self._facet_count.get(facet, 0) + 1
            self._facet_owner[facet] = simplex

    def _inward_normal(self, facet: frozenset[int]) -> IntVector:
        normal = self._normal_cache.get(facet)
        if normal is None:
            if self.k == 1:
                normal = (1,)  # the origin facet of a ray
            else:
                rows = [self.gens[i] for i in sorted(facet)]
                normal = primitive_kernel_vector(rows)
                if normal is None:
                    raise AssertionError("simplex facet must span a hyperplane")
            self._normal_cache[facet] = normal
        owner = self._facet_owner[facet]
        opposite = next(i for i in owner if i not in facet)
        side = sum(a * b for a, b in zip(normal, self.gens[opposite]))
        if side < 0:
            normal = tuple(-a for a in normal)
            self._normal_cache[facet] = normal
            # re-anchor the cached sign to the current owner
        elif side == 0:
            raise AssertionError("degenerate simplex")
        return normal

    def _place(self, i: int):
        g = self.gens[i]
        visible = []
        for facet, count in self._facet_count.items():
            if count != 1:
                continue
            normal = self._inward_normal(facet)
            if sum(a * b for a, b in zip(normal, g)) < 0:
                visible.append(facet)
        for facet in visible:
            self._add_simplex(tuple(sorted(facet | {i})))

    def boundary_normals(self) -> list[IntVector]:
        out = []
        for facet, count in self._facet_count.items():
            if count == 1:
                out.append(self._inward_normal(facet))
        return out

    def contains(self, z: IntVector) -> bool:
        return all(
            sum(a * b for a, b in zip(normal, z)) >= 0
            for normal in self.boundary_normals()
        )


class _ConeGeometry:
    """Shared exact machinery for one cone: lattice coordinates,
    triangulation, facet normals, and parallelepiped candidates."""

    def __init__(self, cone: ConeGens):
        self.cone = cone
        gens: list[IntVector] = []
        for g in cone.generators:
            if g not in gens:
                gens.append(g)
        self.gens = gens
        basis = saturation_basis(gens, cone.dim)
        self.coords = LatticeCoords(basis, cone.dim)
        self.full_dim = self.coords.is_identity()
        if self.full_dim:
            self.hat = list(gens)
        else:
            hat = []
            for g in gens:
                h = self.coords.to_coords(g)
                if h is None:
                    raise AssertionError("generator outside its own saturation lattice")
                hat.append(h)
            self.hat = hat
        self.tri = _Triangulation(self.hat)
        self._normals = self.tri.boundary_normals()

    def to_hat(self, z: IntVector) -> IntVector | None:
        if self.full_dim:
            return z
        return self.coords.to_coords(z)

    def from_hat(self, zhat: IntVector) -> IntVector:
        if self.full_dim:
            return zhat
        return self.coords.from_coords(zhat)

    def contains_hat(self, zhat: IntVector) -> bool:
        return all(
            sum(a * b for a, b in zip(normal, zhat)) >= 0 for normal in self._normals
        )

    def contains(self, z: IntVector) -> bool:
        zhat = self.to_hat(z)
        return zhat is not None and self.contains_hat(zhat)

    def parallelepiped_points(self, simplex: tuple[int, ...]) -> list[IntVector]:
        """Nonzero lattice points of the half-open fundamental
        parallelepiped spanned by one simplicial subcone."""
        k = self.tri.k
        cols = [self.hat[i] for i in simplex]
        mat_rows = [[cols[j][r] for j in range(k)] for r in range(k)]
        det = abs(int_det(mat_rows))
        if det == 1:
            return []
        inverse = _invert_rational(mat_rows)
        hnf_cols, _, rank = column_hermite(mat_rows)
        if rank != k:
            raise AssertionError("simplicial subcone must be nonsingular")
        points: set[IntVector] = set()
        for rep in product(*(range(hnf_cols[i][i]) for i in range(k))):
            lam = [
                sum(inverse[r][c] * rep[c] for c in range(k)) for r in range(k)
            ]
            frac = [l - (l.numerator // l.denominator) for l in lam]
            point = tuple(
                int(sum(cols[j][r] * frac[j] for j in range(k))) for r in range(k)
            )
            points.add(point)
        if len(points) != det:
            raise AssertionError("parallelepiped enumeration lost a coset")
        points.discard(tuple([0] * k))
        return sorted(points)


def _invert_rational(rows: list[list[int]]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [
        [Fraction(rows[i][j]) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise AssertionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        prow = aug[col]
        inv = Fraction(1) / prow[col]
        aug[col] = prow = [e * inv for e in prow]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], prow)]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# Hilbert bases and normality


def hilbert_basis(cone: ConeGens) -> HilbertBasis:
    """Minimal integral generating set of ``cone`` intersected with the
    ambient integer lattice.

    The generator set is triangulated into simplicial subcones; lattice
    points of each half-open fundamental parallelepiped together with the
    generators form a candidate superset (any irreducible point lies in
    some subcone's parallelepiped), which a graded reduction sweep prunes
    to the irreducible elements.
    """
    geom = _ConeGeometry(cone)
    candidates: dict[IntVector, IntVector] = {}  # hat -> original
    for ghat, g in zip(geom.hat, geom.gens):
        candidates[ghat] = g
    for simplex in geom.tri.simplices:
        for phat in geom.parallelepiped_points(simplex):
            if phat not in candidates:
                candidates[phat] = geom.from_hat(phat)
    order = sorted(candidates.items(), key=lambda item: (sum(item[1]), item[1]))
    kept: list[tuple[IntVector, IntVector, int]] = []  # (hat, orig, grade)
    for chat, c in order:
        grade = sum(c)
        reducible = False
        for hhat, h, hgrade in kept:
            if hgrade >= grade:
                break
            if any(a < b for a, b in zip(c, h)):
                continue
            diff = tuple(a - b for a, b in zip(chat, hhat))
            if geom.contains_hat(diff):
                reducible = True
                break
        if not reducible:
            kept.append((chat, c, grade))
    return HilbertBasis(tuple(sorted(c for _, c, _ in kept)))


@dataclass(frozen=True)
class NormalityReport:
    normal: bool
    witness: IntVector | None = None


def is_normal_semigroup(cone: ConeGens) -> NormalityReport:
    """Decide whether the semigroup generated by the cone's generators
    contains every lattice point of the cone.

    The witness, when present, is the first Hilbert basis element (in
    lexicographic order) with no decomposition over the generators.
    """
    basis = hilbert_basis(cone)
    genset = set(cone.generators)
    for h in basis.elements:
        if h in genset:
            continue
        if semigroup_member(cone, h) is None:
            return NormalityReport(False, h)
    return NormalityReport(True)


def semigroup_member(cone: ConeGens, z) -> tuple[IntVector, ...] | None:
    """A multiset of generators summing to ``z``, or None.

    Depth-first subtraction with the generators in their stored order,
    memoized on failed residuals; the returned decomposition is
    deterministic.
    """
    z = tuple(int(e) for e in z)
    if len(z) != cone.dim:
        raise InputError("dimension-mismatch", "point has wrong dimension")
    if any(e < 0 for e in z):
        raise InputError("not-nonnegative", "semigroup members are nonnegative")
    gens = cone.generators
    dead: set[tuple[int, IntVector]] = set()

    def search(start: int, residual: IntVector) -> list[IntVector] | None:
        if all(e == 0 for e in residual):
            return []
        key = (start, residual)
        if key in dead:
            return None
        for i in range(start, len(gens)):
            g = gens[i]
            if all(a >= b for a, b in zip(residual, g)):
                rest = search(i, tuple(a - b for a, b in zip(residual, g)))
                if rest is not None:
                    return [g] + rest
        dead.add(key)
        return None

    result = search(0, z)
    return None if result is None else tuple(result)


def cone_member(cone: ConeGens, z) -> bool:
    """Exact LP feasibility of ``z = sum(lambda_i g_i), lambda >= 0``."""
    z = tuple(int(e) for e in z)
    if len(z) != cone.dim:
        raise InputError("dimension-mismatch", "point has wrong dimension")
    q = len(cone.generators)
    cons = []
    for i in range(cone.dim):
        coeffs = [g[i] for g in cone.generators]
        cons.append((coeffs, EQUAL, z[i]))
    lp = linear_program([0] * q, cons)
    return lp_solve(lp).status == OPTIMAL


# ---------------------------------------------------------------------------
# Lattice points of dilated polytopes


def dilation_lattice_points(
    vertices: list, b: int, budget: int | None = None
) -> list[IntVector]:
    """All lattice points of ``b * conv(vertices)`` for integral vertices.

    The scan runs inside the affine lattice of the polytope: each
    coordinate of the scan is bracketed by a pair of exact LPs, so every
    enumerated prefix is feasible and the leaves are exactly the lattice
    points.
    """
    if b < 1:
        raise InputError("bad-parameter", "dilation factor must be positive")
    verts = [tuple(int(e) for e in v) for v in vertices]
    if not verts:
        raise InputError("bad-shape", "need at least one vertex")
    n = len(verts[0])
    v0 = verts[0]
    diffs = [tuple(v[i] - v0[i] for i in range(n)) for v in verts]
    nonzero = [d for d in diffs if any(e != 0 for e in d)]
    base = tuple(b * e for e in v0)
    if not nonzero:
        return [base]
    lattice = LatticeCoords(saturation_basis(nonzero, n), n)
    vhat = []
    for d in diffs:
        h = lattice.to_coords(d)
        if h is None:
            raise AssertionError("vertex difference escaped its lattice")
        vhat.append(h)
    k = lattice.rank
    q = len(vhat)
    points: list[IntVector] = []
    counter = [0]

    def bracket(prefix: tuple[int, ...], depth: int) -> tuple[int, int] | None:
        cons = [([1] * q, EQUAL, b)]
        for ell, value in enumerate(prefix):
            cons.append(([vh[ell] for vh in vhat], EQUAL, value))
        objective = [vh[depth] for vh in vhat]
        lo = lp_solve(linear_program(objective, cons, sense="min"))
        hi = lp_solve(linear_program(objective, cons, sense="max"))
        if lo.status != OPTIMAL or hi.status != OPTIMAL:
            return None
        lo_int = -((-lo.value.numerator) // lo.value.denominator)  # ceil
        hi_int = hi.value.numerator // hi.value.denominator  # floor
        if lo_int > hi_int:
            return None
        return lo_int, hi_int

    def scan(prefix: tuple[int, ...]):
        depth = len(prefix)
        if depth == k:
            z = tuple(a + c for a, c in zip(base, lattice.from_coords(prefix)))
            points.append(z)
            if budget is not None and len(points) > budget:
                raise BudgetExceededError("lattice point budget exceeded")
            return
        counter[0] += 2
        if budget is not None and counter[0] > 4 * budget:
            raise BudgetExceededError("lattice scan budget exceeded")
        rng = bracket(prefix, depth)
        if rng is None:
            return
        for value in range(rng[0], rng[1] + 1):
            scan(prefix + (value,))

    scan(tuple())
    return sorted(points)
