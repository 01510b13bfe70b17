import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from squareclique import Graph, VertexOrder

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# Seven-vertex trace instance: every vertex is in S, order 1..7.
TRACE_EDGES = [(1, 2), (1, 7), (2, 4), (2, 5), (3, 4), (3, 6), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7)]


@pytest.fixture
def trace_instance():
    g = Graph(range(1, 8), TRACE_EDGES)
    return g, frozenset(range(1, 8)), VertexOrder(range(1, 8))


@st.composite
def graphs(draw, max_vertices=12, min_vertices=0):
    n = draw(st.integers(min_vertices, max_vertices))
    labels = draw(st.lists(st.integers(0, 60), min_size=n, max_size=n, unique=True))
    pairs = [(u, v) for i, u in enumerate(labels) for v in labels[i + 1:]]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(labels, [p for p, keep in zip(pairs, chosen) if keep])


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(range(n), [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
