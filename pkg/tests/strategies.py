"""Hypothesis strategies shared across test modules."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from ramsey_minimal.families import Arithmetic, Periodic, ToothFn
from ramsey_minimal.graph import FiniteGraph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 6, isolated: bool = True, min_edges: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_edges, len(pairs)))) if pairs else []
    if isolated:
        return FiniteGraph.from_edges(chosen, range(n), allow_isolated=True)
    if not chosen:
        chosen = [(0, 1)] if n >= 2 else []
        if not chosen:
            return FiniteGraph.from_edges([(0, 1)])
    return FiniteGraph.from_edges(chosen)


@st.composite
def connected_graphs(draw, max_n: int = 6):
    """Random spanning tree plus extra edges."""
    n = draw(st.integers(2, max_n))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    pairs = list(itertools.combinations(range(n), 2))
    edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=4)))
    return FiniteGraph.from_edges(edges)


@st.composite
def tooth_fns(draw):
    prefix = draw(st.lists(st.integers(1, 5), max_size=6))
    if draw(st.booleans()):
        tail = Periodic(tuple(draw(st.lists(st.integers(1, 5), min_size=1, max_size=4))))
    else:
        tail = Arithmetic(draw(st.integers(1, 5)), draw(st.integers(0, 3)))
    return ToothFn(tuple(prefix), tail)
