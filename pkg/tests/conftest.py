import random

import pytest
from hypothesis import strategies as st

from kfgc.graph_core import Digraph, FgcInstance


def random_digraph(rng, n, m, max_cost=9):
    arcs = []
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        arcs.append((u, v, rng.randint(0, max_cost)))
    return Digraph.build(n, arcs)


def random_instance(rng, n, m, k=1, safe_prob=0.5, max_cost=9):
    edges = []
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v, rng.randint(0, max_cost), rng.random() < safe_prob))
    return FgcInstance.build(n, edges, k)


@st.composite
def instances(draw, max_n=6, max_m=9, max_k=2):
    n = draw(st.integers(2, max_n))
    m = draw(st.integers(0, max_m))
    k = draw(st.integers(1, max_k))
    edges = []
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 2))
        if v >= u:
            v += 1
        edges.append((u, v, draw(st.integers(0, 20)), draw(st.booleans())))
    return FgcInstance.build(n, edges, k)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def triangle_unsafe():
    return FgcInstance.build(3, [(0, 1, 1, "U"), (1, 2, 1, "U"), (0, 2, 1, "U")], 1)


@pytest.fixture
def triangle_safe():
    return FgcInstance.build(3, [(0, 1, 1, "S"), (1, 2, 1, "S"), (0, 2, 1, "S")], 1)


@pytest.fixture
def bidirected_triangle():
    return Digraph.build(3, [(0, 1, 1), (1, 0, 1), (0, 2, 1), (2, 0, 1), (1, 2, 1), (2, 1, 1)])
