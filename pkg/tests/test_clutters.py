import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CLUTTER_8V_COLUMNS, random_connected_graph
from irptools.clutters import (
    Clutter,
    Graph,
    closure_generators,
    disjoint_odd_cycle_condition,
    graph_predicates,
    incidence_matrix,
    is_bipartite,
    is_connected,
    is_perfect,
    maximal_cliques,
    maximal_independent_sets,
    odd_cycles,
)
from irptools.errors import BudgetExceededError, InputError


def to_nx(g: Graph) -> nx.Graph:
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges)
    return ng


def graphs_for_property_tests(count=40, seed=20240817):
    rng = random.Random(seed)
    return [
        random_connected_graph(rng, rng.randint(2, 7), rng.randint(0, 6))
        for _ in range(count)
    ]


def test_clutter_axiom_rejected():
    with pytest.raises(InputError) as err:
        Clutter.from_edge_lists(3, [(0, 1), (0, 1, 2)])
    assert err.value.code == "clutter-axiom"


def test_isolated_vertex_rejected():
    with pytest.raises(InputError) as err:
        Clutter.from_edge_lists(3, [(0, 1)])
    assert err.value.code == "isolated-vertex"


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(InputError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(InputError):
        Graph.from_edges(2, [(0, 1), (1, 0)])


def test_incidence_matrix_8v(clutter_8v):
    m = incidence_matrix(clutter_8v)
    assert (m.rows, m.cols) == (8, 4)
    cols = [tuple(int(x) for x in m.column(j)) for j in range(4)]
    assert cols == CLUTTER_8V_COLUMNS


def test_incidence_matrix_small(k2, p3):
    m = incidence_matrix(k2.edge_clutter())
    assert [tuple(map(int, m.column(j))) for j in range(m.cols)] == [(1, 1)]
    m = incidence_matrix(p3.edge_clutter())
    assert [tuple(map(int, m.column(j))) for j in range(m.cols)] == [
        (1, 1, 0),
        (0, 1, 1),
    ]


def test_closure_generators_k2(k2):
    got = closure_generators(k2.edge_clutter())
    assert got == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_closure_generators_p3(p3):
    got = closure_generators(p3.edge_clutter())
    assert got == [
        (0, 0, 0),
        (0, 0, 1),
        (0, 1, 0),
        (0, 1, 1),
        (1, 0, 0),
        (1, 1, 0),
    ]


def test_closure_generators_8v(clutter_8v):
    got = closure_generators(clutter_8v)
    # independent enumeration: subsets of each edge, unioned
    expected = set()
    for e in clutter_8v.edges:
        members = sorted(e)
        for size in range(len(members) + 1):
            for sub in combinations(members, size):
                expected.add(tuple(1 if i in sub else 0 for i in range(8)))
    assert set(got) == expected
    assert len(got) == 50
    for col in CLUTTER_8V_COLUMNS:
        assert col in got
    for i in range(8):
        assert tuple(1 if j == i else 0 for j in range(8)) in got
    assert got == sorted(got)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**30))
def test_closure_dominated_by_some_column(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, rng.randint(2, 6), rng.randint(0, 4))
    c = g.edge_clutter()
    gens = closure_generators(c)
    cols = c.columns()
    assert tuple([0] * c.n) in gens
    for col in cols:
        assert col in gens
    for alpha in gens:
        assert any(all(a <= v for a, v in zip(alpha, col)) for col in cols)


def test_odd_cycles_c5(c5):
    cycles = odd_cycles(c5)
    assert cycles == [(0, 1, 2, 3, 4)]


def test_odd_cycles_k2(k2):
    assert odd_cycles(k2) == []


def test_odd_cycles_two_triangles(two_triangles_path):
    cycles = odd_cycles(two_triangles_path, max_len=3)
    assert cycles == [(0, 1, 2), (3, 4, 5)]


def test_odd_cycles_budget(k4):
    with pytest.raises(BudgetExceededError):
        odd_cycles(k4, budget=2)


def test_odd_cycle_condition_c5(c5):
    assert disjoint_odd_cycle_condition(c5).holds


def test_odd_cycle_condition_bridge(two_triangles_bridge):
    rep = disjoint_odd_cycle_condition(two_triangles_bridge)
    assert rep.holds


def test_odd_cycle_condition_path(two_triangles_path):
    rep = disjoint_odd_cycle_condition(two_triangles_path)
    assert not rep.holds
    assert rep.witness == ((0, 1, 2), (3, 4, 5))
    assert rep.witness_induced_connected is False
    assert rep.witness_joined_by_edge is False


def test_odd_cycle_condition_requires_connected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(InputError) as err:
        disjoint_odd_cycle_condition(g)
    assert err.value.code == "not-connected"


def test_odd_cycle_condition_monotone_under_bridging(two_triangles_path):
    # adding any edge between the two cycles' vertex sets repairs the failure
    base = two_triangles_path
    for u in (0, 1, 2):
        for v in (3, 4, 5):
            if (u, v) in base.edges:
                continue
            g = Graph.from_edges(base.n, base.edges + ((u, v),))
            assert disjoint_odd_cycle_condition(g).holds


def test_maximal_independent_sets(k3, p3, c4):
    assert maximal_independent_sets(k3) == [(0,), (1,), (2,)]
    assert maximal_independent_sets(p3) == [(0, 2), (1,)]
    assert maximal_independent_sets(c4) == [(0, 2), (1, 3)]


def test_maximal_cliques(k3, c4, c5):
    assert maximal_cliques(k3) == [(0, 1, 2)]
    assert maximal_cliques(c4) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert maximal_cliques(c5) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


def test_clique_clutter_satisfies_axiom():
    for g in graphs_for_property_tests(20):
        c = g.clique_clutter()  # construction itself validates the axiom
        assert c.q >= 1


def test_mis_equals_cliques_of_complement():
    for g in graphs_for_property_tests(25):
        assert maximal_independent_sets(g) == maximal_cliques(g.complement())


def test_mis_against_networkx():
    for g in graphs_for_property_tests(25):
        ours = {frozenset(s) for s in maximal_independent_sets(g)}
        theirs = {
            frozenset(c) for c in nx.find_cliques(nx.complement(to_nx(g)))
        }
        assert ours == theirs


def test_graph_predicates(c4, p3):
    rep = graph_predicates(c4)
    assert (rep.connected, rep.bipartite, rep.unmixed) == (True, True, True)
    rep = graph_predicates(p3)
    assert (rep.connected, rep.bipartite, rep.unmixed) == (True, True, False)
    two_edges = Graph.from_edges(4, [(0, 1), (2, 3)])
    rep = graph_predicates(two_edges)
    assert (rep.connected, rep.bipartite, rep.unmixed) == (False, True, True)


def test_connectivity_and_bipartiteness_against_networkx():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(2, 7)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.4
        ]
        g = Graph.from_edges(n, edges)
        ng = to_nx(g)
        assert is_connected(g) == nx.is_connected(ng)
        assert is_bipartite(g) == nx.is_bipartite(ng)


def test_is_perfect_examples(c4, c5, k4, p3):
    assert is_perfect(c4)
    assert is_perfect(k4)
    assert is_perfect(p3)
    assert not is_perfect(c5)


def test_bipartite_graphs_are_perfect():
    for g in graphs_for_property_tests(25):
        if is_bipartite(g):
            assert is_perfect(g)


def test_c7_and_complement_not_perfect():
    c7 = Graph.from_edges(7, [(i, (i + 1) % 7) for i in range(7)])
    assert not is_perfect(c7)
    assert not is_perfect(c7.complement())
