"""Exact rational and integer linear algebra on small dense matrices.

Rational scalars are ``fractions.Fraction`` (always in lowest terms with a
positive denominator), vectors are tuples, matrices are small frozen
dataclasses.  Integer routines (Bareiss determinants, Hermite column
reduction, kernel and saturation bases) avoid Fraction overhead on the hot
paths of the polyhedral code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InputError

Rational = Fraction
RatVector = tuple[Fraction, ...]
IntVector = tuple[int, ...]


def vec(entries) -> RatVector:
    """Build a rational vector from any iterable of Fraction-convertibles."""
    return tuple(Fraction(e) for e in entries)


def dot(u, v) -> Fraction:
    if len(u) != len(v):
        raise InputError("dimension-mismatch", f"dot: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def idot(u: IntVector, v: IntVector) -> int:
    return sum(a * b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u):
    return tuple(c * a for a in u)


def is_integral(u) -> bool:
    return all(Fraction(a).denominator == 1 for a in u)


def as_int_vector(u) -> IntVector:
    if not is_integral(u):
        raise InputError("not-integral", f"expected an integer vector, got {u}")
    return tuple(int(a) for a in u)


@dataclass(frozen=True)
class RatMatrix:
    """Dense rational matrix, stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise InputError("bad-shape", "matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                "bad-shape",
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}",
            )

    @classmethod
    def from_rows(cls, rows) -> "RatMatrix":
        rows = [tuple(Fraction(e) for e in r) for r in rows]
        if not rows:
            raise InputError("bad-shape", "matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise InputError("bad-shape", "ragged rows")
        flat = tuple(e for r in rows for e in r)
        return cls(len(rows), width, flat)

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> RatVector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_vectors(self) -> list[RatVector]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> RatVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def column_vectors(self) -> list[RatVector]:
        return [self.column(j) for j in range(self.cols)]


def solve_linear(m: RatMatrix, rhs: RatVector) -> RatVector | None:
    """Solve the square system ``m @ x = rhs`` exactly.

    Returns the unique solution, or None when the matrix is singular.
    """
    if m.rows != m.cols:
        raise InputError("dimension-mismatch", "solve_linear needs a square matrix")
    if len(rhs) != m.rows:
        raise InputError("dimension-mismatch", "right-hand side has wrong length")
    aug = [list(m.row(i)) + [Fraction(rhs[i])] for i in range(m.rows)]
    sol = _gauss_solve(aug, m.rows)
    return None if sol is None else tuple(sol)


def _gauss_solve(aug: list[list[Fraction]], n: int) -> list[Fraction] | None:
    """Gaussian elimination with first-nonzero pivoting on an augmented system."""
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        prow = aug[col]
        inv = Fraction(1) / prow[col]
        aug[col] = prow = [e * inv for e in prow]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], prow)]
    return [aug[r][n] for r in range(n)]


def rational_rank(rows: list) -> int:
    """Rank of a matrix given as a list of row vectors."""
    work = [list(map(Fraction, r)) for r in rows]
    cols = len(work[0]) if work else 0
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        inv = Fraction(1) / prow[col]
        prow = [e * inv for e in prow]
        work[rank] = prow
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], prow)]
        rank += 1
        if rank == len(work):
            break
    return rank


# ---------------------------------------------------------------------------
# Integer (fraction-free) routines


def int_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (pkk * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def primitive_kernel_vector(rows: list[IntVector]) -> IntVector | None:
    """Primitive integer spanning vector of a one-dimensional kernel.

    ``rows`` must be ``dim - 1`` integer vectors of full rank; returns None
    when the kernel is not one-dimensional.  The sign is not normalized.

    Fraction-free: component j is the signed maximal minor omitting
    column j (the cross-product generalization).
    """
    dim = len(rows[0]) if rows else 0
    if len(rows) != dim - 1:
        return None
    out = []
    sign = 1
    for j in range(dim):
        minor = [[r[c] for c in range(dim) if c != j] for r in rows]
        out.append(sign * int_det(minor))
        sign = -sign
    g = 0
    for e in out:
        g = gcd(g, e)
    if g == 0:
        return None  # rows were rank deficient
    return tuple(e // g for e in out)


def column_hermite(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]], int]:
    """Column echelon form of an integer matrix via unimodular column ops.

    Returns ``(h, v, rank)`` where ``h = m @ v`` column by column, ``v`` is
    unimodular, the first ``rank`` columns of ``h`` are the nonzero echelon
    columns (pivots positive, echelon in row order) and the rest are zero.
    For a nonsingular square input, ``h`` is lower triangular with positive
    diagonal, so its columns generate the same lattice as the input's.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    cols = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
    v = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    c = 0
    for r in range(nrows):
        pivot = next((j for j in range(c, ncols) if cols[j][r] != 0), None)
        if pivot is None:
            continue
        cols[c], cols[pivot] = cols[pivot], cols[c]
        v[c], v[pivot] = v[pivot], v[c]
        for j in range(c + 1, ncols):
            # Euclidean column reduction: ends with cols[j][r] == 0 and
            # cols[c][r] == +-gcd of the original pair.
            while cols[j][r] != 0:
                q = cols[c][r] // cols[j][r]
                cols[c] = [x - q * y for x, y in zip(cols[c], cols[j])]
                v[c] = [x - q * y for x, y in zip(v[c], v[j])]
                cols[c], cols[j] = cols[j], cols[c]
                v[c], v[j] = v[j], v[c]
        if cols[c][r] < 0:
            cols[c] = [-x for x in cols[c]]
            v[c] = [-x for x in v[c]]
        c += 1
        if c == ncols:
            break
    return [list(col) for col in cols], [list(col) for col in v], c


def int_kernel_basis(rows: list[IntVector]) -> list[IntVector]:
    """Basis of the integer kernel ``{x : rows @ x = 0}``.

    The returned basis generates a saturated lattice (kernels of integer
    matrices always are).
    """
    if not rows:
        raise InputError("bad-shape", "kernel of an empty matrix is ambiguous")
    cols_h, v, rank = column_hermite([list(r) for r in rows])
    ncols = len(rows[0])
    return [tuple(v[j]) for j in range(rank, ncols)]


def saturation_basis(vectors: list[IntVector], dim: int) -> list[IntVector]:
    """Basis of the saturated lattice ``Z^dim`` intersected with the span.

    ``vectors`` span a rational subspace; the result is a lattice basis of
    all integer points of that subspace.
    """
    if not vectors:
        return []
    relations = int_kernel_basis(vectors)  # all d with <d, v> = 0 for each v
    if not relations:
        return [tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim)]
    return int_kernel_basis(relations)


class LatticeCoords:
    """Exact coordinates with respect to a saturated lattice basis.

    Maps between ``Z^dim`` points lying in a subspace and their integer
    coordinate vectors over ``basis``.
    """

    def __init__(self, basis: list[IntVector], dim: int):
        self.basis = [tuple(b) for b in basis]
        self.dim = dim
        self.rank = len(basis)
        if self.rank == 0:
            self._pivot_rows: list[int] = []
            self._solver = None
            return
        # pick rank many independent rows of the dim x rank basis matrix
        rows = [[self.basis[j][i] for j in range(self.rank)] for i in range(dim)]
        chosen: list[int] = []
        work: list[list[Fraction]] = []
        for i in range(dim):
            trial = work + [list(map(Fraction, rows[i]))]
            if rational_rank(trial) == len(trial):
                work = trial
                chosen.append(i)
                if len(chosen) == self.rank:
                    break
        self._pivot_rows = chosen
        square = RatMatrix.from_rows([rows[i] for i in chosen])
        self._square = square

    def is_identity(self) -> bool:
        return self.rank == self.dim and all(
            self.basis[j] == tuple(1 if i == j else 0 for i in range(self.dim))
            for j in range(self.rank)
        )

    def to_coords(self, z: IntVector) -> IntVector | None:
        """Integer coordinates of ``z`` over the basis, or None if ``z`` is
        outside the lattice."""
        rhs = tuple(Fraction(z[i]) for i in self._pivot_rows)
        sol = solve_linear(self._square, rhs)
        if sol is None or not is_integral(sol):
            return None
        coords = tuple(int(c) for c in sol)
        if self.from_coords(coords) != tuple(z):
            return None
        return coords

    def from_coords(self, coords: IntVector) -> IntVector:
        return tuple(
            sum(self.basis[j][i] * coords[j] for j in range(self.rank))
            for i in range(self.dim)
        )
