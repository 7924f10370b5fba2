from __future__ import annotations

import pytest
from hypothesis import strategies as st

from graphsym import from_edge_list, generators
from graphsym.graph import Graph


@pytest.fixture
def figure1() -> Graph:
    return generators.named("figure1")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    possible = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if possible:
        edges = draw(st.lists(st.sampled_from(possible), unique=True,
                              max_size=len(possible)))
    else:
        edges = []
    return from_edge_list(n, edges)


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 10):
    """Uniformly shaped random labeled trees via random parent choices."""
    n = draw(st.integers(min_n, max_n))
    edges = [(v, draw(st.integers(0, v - 1))) for v in range(1, n)]
    return from_edge_list(n, edges)


@st.composite
def permutations_of(draw, n: int):
    return draw(st.permutations(list(range(n))))


def set_partitions(items: list):
    """All set partitions of a list (Bell-number many; keep items small)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part
