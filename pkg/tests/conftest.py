import random

import pytest

from irptools.clutters import Clutter, Graph

# Regression fixture: the 8-vertex uniform clutter with four 4-element edges
# whose lifted edge vectors form a Hilbert basis while both rounding
# properties fail.
CLUTTER_8V_EDGES = [
    (2, 3, 5, 7),  # {x3, x4, x6, x8}
    (1, 4, 5, 6),  # {x2, x5, x6, x7}
    (0, 3, 4, 7),  # {x1, x4, x5, x8}
    (0, 1, 2, 7),  # {x1, x2, x3, x8}
]

CLUTTER_8V_COLUMNS = [
    (0, 0, 1, 1, 0, 1, 0, 1),
    (0, 1, 0, 0, 1, 1, 1, 0),
    (1, 0, 0, 1, 1, 0, 0, 1),
    (1, 1, 1, 0, 0, 0, 0, 1),
]


@pytest.fixture(scope="session")
def clutter_8v() -> Clutter:
    return Clutter.from_edge_lists(8, CLUTTER_8V_EDGES)


@pytest.fixture(scope="session")
def k2() -> Graph:
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture(scope="session")
def k3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture(scope="session")
def k4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture(scope="session")
def p3() -> Graph:
    """Path on three vertices, 1-2-3."""
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture(scope="session")
def c4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture(scope="session")
def c5() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture(scope="session")
def two_triangles_bridge() -> Graph:
    """Two triangles {1,2,3} and {4,5,6} joined by the edge 3-4."""
    return Graph.from_edges(
        6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]
    )


@pytest.fixture(scope="session")
def two_triangles_path() -> Graph:
    """Two triangles joined through a middle vertex by a 2-path 3-7-4."""
    return Graph.from_edges(
        7, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 6), (6, 3)]
    )


def random_connected_graph(rng: random.Random, n: int, extra_edges: int) -> Graph:
    """Random spanning tree plus a few extra edges; always connected."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    pool = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges
    ]
    rng.shuffle(pool)
    for e in pool[:extra_edges]:
        edges.add(e)
    return Graph.from_edges(n, sorted(edges))


def random_clutter(rng: random.Random, max_n: int = 6, max_q: int = 5) -> Clutter:
    """Random clutter: random edges filtered to an antichain, isolated
    vertices dropped by relabelling."""
    while True:
        n = rng.randint(2, max_n)
        q = rng.randint(1, max_q)
        edges: list[frozenset[int]] = []
        for _ in range(q):
            size = rng.randint(1, n)
            e = frozenset(rng.sample(range(n), size))
            edges.append(e)
        antichain = [
            e
            for e in set(edges)
            if not any(other != e and e > other for other in set(edges))
        ]
        # drop duplicates while keeping only maximal members
        antichain = sorted(set(antichain), key=lambda e: sorted(e))
        covered = sorted(set().union(*antichain)) if antichain else []
        if not covered:
            continue
        remap = {v: i for i, v in enumerate(covered)}
        remapped = [frozenset(remap[v] for v in e) for e in antichain]
        try:
            return Clutter.from_edge_lists(len(covered), remapped)
        except Exception:
            continue
