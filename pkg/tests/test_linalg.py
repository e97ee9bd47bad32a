from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from irptools.errors import InputError
from irptools.linalg import (
    LatticeCoords,
    RatMatrix,
    column_hermite,
    int_det,
    int_kernel_basis,
    primitive_kernel_vector,
    rational_rank,
    saturation_basis,
    solve_linear,
    vec,
)


def test_solve_identity():
    m = RatMatrix.from_rows([[1, 0], [0, 1]])
    assert solve_linear(m, vec([3, 5])) == vec([3, 5])


def test_solve_symmetric_2x2():
    m = RatMatrix.from_rows([[1, 1], [1, -1]])
    assert solve_linear(m, vec([1, 0])) == (Fraction(1, 2), Fraction(1, 2))


def test_solve_singular():
    m = RatMatrix.from_rows([[1, 1], [2, 2]])
    assert solve_linear(m, vec([1, 7])) is None


def test_solve_dimension_mismatch():
    m = RatMatrix.from_rows([[1, 1], [1, -1]])
    with pytest.raises(InputError):
        solve_linear(m, vec([1, 0, 0]))
    with pytest.raises(InputError):
        solve_linear(RatMatrix.from_rows([[1, 2, 3]]), vec([1]))


def test_int_det_examples():
    assert int_det([[1, 0], [0, 1]]) == 1
    assert int_det([[0, 1], [1, 0]]) == -1
    assert int_det([[2, 0], [0, 3]]) == 6
    assert int_det([[1, 2], [2, 4]]) == 0
    assert int_det([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-5, 5), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
def test_int_det_matches_fraction_elimination(rows):
    # cofactor expansion as the independent reference
    def det3(m):
        a, b, c = m[0]
        d, e, f = m[1]
        g, h, i = m[2]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    assert int_det(rows) == det3(rows)


def test_primitive_kernel_vector():
    k = primitive_kernel_vector([(0, 0, 1), (1, 0, 1)])
    assert k is not None
    assert k in ((0, 1, 0), (0, -1, 0))
    k = primitive_kernel_vector([(2, 4)])
    assert k in ((2, -1), (-2, 1))
    # not a 1-dimensional kernel
    assert primitive_kernel_vector([(1, 1, 1), (2, 2, 2)]) is None


def test_column_hermite_square():
    h, v, rank = column_hermite([[2, 1], [0, 3]])
    assert rank == 2
    # lower triangular, positive diagonal, same lattice determinant
    assert h[0][1] == 0 or h[1][0] == 0
    assert h[0][0] > 0 and h[1][1] > 0
    assert abs(h[0][0] * h[1][1]) == abs(int_det([[2, 1], [0, 3]]))


def test_int_kernel_basis():
    basis = int_kernel_basis([(1, 1, 1)])
    assert len(basis) == 2
    for b in basis:
        assert sum(b) == 0
    basis = int_kernel_basis([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert basis == []


def test_saturation_basis_full_rank():
    basis = saturation_basis([(1, 0), (0, 1)], 2)
    assert sorted(basis) == [(0, 1), (1, 0)]


def test_saturation_basis_saturates():
    # span of (2, 0) meets Z^2 in the lattice generated by (1, 0)
    basis = saturation_basis([(2, 0)], 2)
    assert len(basis) == 1
    assert basis[0] in ((1, 0), (-1, 0))


def test_lattice_coords_roundtrip():
    coords = LatticeCoords(saturation_basis([(1, 1, 2)], 3), 3)
    assert coords.rank == 1
    c = coords.to_coords((2, 2, 4))
    assert c is not None
    assert coords.from_coords(c) == (2, 2, 4)
    assert coords.to_coords((1, 0, 0)) is None


def test_rational_rank():
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_rank([[1, 0], [0, 1]]) == 2
