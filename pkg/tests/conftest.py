from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mdpart import Multigraph

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def multigraphs(draw, min_n: int = 1, max_n: int = 8, max_mult: int = 3) -> Multigraph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mults = draw(st.lists(st.integers(0, max_mult), min_size=len(pairs), max_size=len(pairs)))
    return Multigraph(n, [(u, v, k) for (u, v), k in zip(pairs, mults) if k])


@st.composite
def graph_and_subset(draw, max_n: int = 8, max_mult: int = 3):
    G = draw(multigraphs(max_n=max_n, max_mult=max_mult))
    X = draw(st.sets(st.integers(0, G.n - 1)))
    return G, frozenset(X)


@st.composite
def graph_subset_budget(draw, max_n: int = 8, max_mult: int = 3, max_f: int = 5):
    G, X = draw(graph_and_subset(max_n, max_mult))
    f = draw(st.lists(st.integers(0, max_f), min_size=G.n, max_size=G.n))
    return G, X, f


def brute_is_nice(G: Multigraph, Y, f) -> bool:
    Y = set(Y)
    return all(sum(G.multiplicity(v, u) for u in Y if u != v) >= f[v] for v in Y)


def brute_nice_subsets(G: Multigraph, X, f):
    items = sorted(X)
    for r in range(1, len(items) + 1):
        for Y in itertools.combinations(items, r):
            if brute_is_nice(G, Y, f):
                yield frozenset(Y)


def brute_feasible_splits(G: Multigraph, a, b):
    V = list(G.vertices())
    for r in range(1, G.n):
        for A in itertools.combinations(V, r):
            B = set(V) - set(A)
            if brute_is_nice(G, A, a) and brute_is_nice(G, B, b):
                yield frozenset(A), frozenset(B)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter) -> None:
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
