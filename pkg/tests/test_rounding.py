import random
from fractions import Fraction

import pytest

from conftest import random_clutter, random_connected_graph
from irptools.clutters import Clutter, incidence_matrix
from irptools.errors import InputError
from irptools.lp import GREATER_EQ, LESS_EQ, OPTIMAL, ilp_solve, linear_program, lp_solve
from irptools.rounding import (
    GEQ,
    LEQ,
    ehrhart_equality,
    irp_geq,
    irp_leq,
    irp_witness_search,
)


def test_irp_leq_k2(k2):
    verdict = irp_leq(k2.edge_clutter())
    assert verdict.holds
    assert verdict.method == "normality"


def test_irp_geq_k2(k2):
    assert irp_geq(k2.edge_clutter()).holds


def test_irp_both_fail_8v(clutter_8v):
    leq = irp_leq(clutter_8v)
    geq = irp_geq(clutter_8v)
    assert not leq.holds and not geq.holds
    assert leq.certificate is not None
    assert geq.certificate is not None


def test_irp_leq_clique_clutter_of_perfect_graph(c4):
    assert irp_leq(c4.clique_clutter()).holds


def test_irp_geq_bipartite(c4):
    assert irp_geq(c4.edge_clutter()).holds


def test_witness_none_k2(k2):
    a = incidence_matrix(k2.edge_clutter())
    assert irp_witness_search(a, LEQ, 3) is None
    assert irp_witness_search(a, GEQ, 3) is None


def test_witness_found_8v(clutter_8v):
    a = incidence_matrix(clutter_8v)
    found = [
        irp_witness_search(a, direction, 2) for direction in (LEQ, GEQ)
    ]
    assert any(w is not None for w in found)
    for w in found:
        if w is None:
            continue
        # re-verify the certificate against the plain LP/ILP solvers
        cols = clutter_8v.columns()
        q = len(cols)
        if w.direction == LEQ:
            cons = [
                ([col[i] for col in cols], GREATER_EQ, w.alpha[i])
                for i in range(clutter_8v.n)
            ]
            lp = linear_program([1] * q, cons)
            relaxed = lp_solve(lp)
            integral = ilp_solve(lp, bounds=[(0, sum(w.alpha))] * q)
            rounded = -((-relaxed.value.numerator) // relaxed.value.denominator)
        else:
            cons = [
                ([col[i] for col in cols], LESS_EQ, w.alpha[i])
                for i in range(clutter_8v.n)
            ]
            lp = linear_program([1] * q, cons, sense="max")
            relaxed = lp_solve(lp)
            integral = ilp_solve(lp, bounds=[(0, max(w.alpha))] * q)
            rounded = relaxed.value.numerator // relaxed.value.denominator
        assert relaxed.status == OPTIMAL and integral.status == OPTIMAL
        assert relaxed.value == w.lp_value
        assert rounded == w.rounded
        assert integral.value == w.ilp_value
        assert w.rounded != w.ilp_value


def test_witness_lp_values_match_simplex_on_window(k3):
    # the vertex-dual evaluation must agree with the simplex on every alpha
    from itertools import product

    clutter = k3.edge_clutter()
    a = incidence_matrix(clutter)
    cols = clutter.columns()
    q = len(cols)
    for alpha in product(range(3), repeat=3):
        if not any(alpha):
            continue
        cons = [
            ([col[i] for col in cols], GREATER_EQ, alpha[i]) for i in range(3)
        ]
        relaxed = lp_solve(linear_program([1] * q, cons))
        w = irp_witness_search(a, LEQ, 2)
        # K3 holds, so no witness; recompute the dual value directly
        assert w is None
        from irptools.polyhedra import _vertices_of_system

        verts = _vertices_of_system(
            [tuple(map(Fraction, c)) for c in cols], 3, "<="
        )
        dual = max(sum(Fraction(x) * v for x, v in zip(alpha, vert)) for vert in verts)
        assert dual == relaxed.value


def test_zero_alpha_never_witness(k3):
    a = incidence_matrix(k3.edge_clutter())
    w = irp_witness_search(a, LEQ, 1)
    assert w is None or any(w.alpha)


def test_witness_agrees_with_decider_random():
    rng = random.Random(2024)
    for _ in range(25):
        c = random_clutter(rng, max_n=5, max_q=4)
        a = incidence_matrix(c)
        leq_holds = irp_leq(c).holds
        witness = irp_witness_search(a, LEQ, 2)
        if witness is not None:
            assert not leq_holds
        if leq_holds:
            assert witness is None
        geq_holds = irp_geq(c).holds
        witness = irp_witness_search(a, GEQ, 2)
        if witness is not None:
            assert not geq_holds
        if geq_holds:
            assert witness is None


def test_ehrhart_uniform_guard(p3):
    c = Clutter.from_edge_lists(3, [(0, 1), (1, 2), (0, 1, 2)][:2])
    mixed = Clutter.from_edge_lists(4, [(0, 1), (1, 2, 3)])
    with pytest.raises(InputError) as err:
        ehrhart_equality(mixed, 3)
    assert err.value.code == "not-uniform"


def test_ehrhart_k2(k2):
    rep = ehrhart_equality(k2.edge_clutter(), 3)
    assert rep.equal_up_to_b


def test_ehrhart_8v(clutter_8v):
    rep = ehrhart_equality(clutter_8v, 9)
    assert rep.equal_up_to_b


def test_ehrhart_c4(c4):
    rep = ehrhart_equality(c4.edge_clutter(), 4)
    assert rep.equal_up_to_b


def test_ehrhart_on_uniform_clutters_with_irp():
    rng = random.Random(31)
    checked = 0
    while checked < 8:
        g = random_connected_graph(rng, rng.randint(2, 5), rng.randint(0, 4))
        c = g.edge_clutter()
        if not (irp_leq(c).holds or irp_geq(c).holds):
            continue
        checked += 1
        assert ehrhart_equality(c, c.n + 1).equal_up_to_b
