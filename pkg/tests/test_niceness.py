import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mdpart import (
    DegreeFunction,
    InputError,
    Multigraph,
    is_degenerate,
    is_meager,
    is_nice,
    maximal_nice_subset,
    meager_violator,
    minimal_nice_subset,
)
from mdpart.generators import gen_complete, gen_path, gen_tk3

from conftest import brute_is_nice, brute_nice_subsets, graph_subset_budget, multigraphs


def disjoint_k4_k3() -> Multigraph:
    k4 = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    k3 = [(4, 5), (4, 6), (5, 6)]
    return Multigraph(7, k4 + k3)


class TestDegreeFunction:
    def test_constant_and_coerce(self):
        assert DegreeFunction.constant(3, 2) == [2, 2, 2]
        assert DegreeFunction.coerce(1, 2) == (1, 1)
        f = DegreeFunction([1, 2])
        assert DegreeFunction.coerce(f, 2) is f

    def test_length_mismatch(self):
        with pytest.raises(InputError):
            DegreeFunction.coerce([1, 2], 3)

    def test_negative_rejected(self):
        with pytest.raises(InputError):
            DegreeFunction([0, -1])

    def test_arithmetic(self):
        f = DegreeFunction([1, 2, 3])
        assert f + 1 == [2, 3, 4]
        assert f + [1, 0, 1] == [2, 2, 4]
        assert f - DegreeFunction([1, 1, 1]) == [0, 1, 2]

    def test_floor_is_explicit(self):
        b = DegreeFunction([0, 2])
        with pytest.raises(InputError):
            b - 1
        low = b.minus(1, floor=-1)
        assert list(low) == [-1, 1] and low.floor == -1

    def test_non_integer(self):
        with pytest.raises(InputError):
            DegreeFunction([1.0])


class TestMaximalNiceSubset:
    def test_zero_budget_keeps_everything(self):
        G = gen_path(4)
        assert maximal_nice_subset(G, {0, 2, 3}, 0) == {0, 2, 3}

    def test_path_with_budget_two(self):
        assert maximal_nice_subset(gen_path(3), range(3), 2) == frozenset()

    @pytest.mark.parametrize("t", [1, 2, 3, 7])
    def test_tk3(self, t):
        assert maximal_nice_subset(gen_tk3(t), range(3), 1) == {0, 1, 2}

    @given(graph_subset_budget())
    def test_result_is_nice_and_maximum(self, case):
        G, X, f = case
        Y = maximal_nice_subset(G, X, f)
        assert Y <= X
        assert brute_is_nice(G, Y, f)
        for Z in brute_nice_subsets(G, X, f):
            assert Z <= Y

    @given(graph_subset_budget(), st.randoms(use_true_random=False))
    def test_peel_order_independence(self, case, rnd):
        G, X, f = case
        alive = set(X)
        while True:
            bad = [v for v in alive if G.degree_into(v, alive) < f[v]]
            if not bad:
                break
            alive.discard(rnd.choice(bad))
        assert maximal_nice_subset(G, X, f) == alive


class TestIsMeager:
    def test_singleton(self):
        G = gen_complete(4)
        assert is_meager(G, {2}, 5)
        assert is_meager(G, {2}, 0)

    def test_triangle(self):
        assert not is_meager(gen_tk3(1), range(3), 1)

    def test_path(self):
        assert is_meager(gen_path(3), range(3), 1)

    def test_isolated_member_rejected(self):
        G = Multigraph(3, [(0, 1)])
        with pytest.raises(InputError, match="isolated"):
            is_meager(G, {0, 2}, 1)

    def test_violator(self):
        G = gen_tk3(1)
        assert meager_violator(G, range(3), 1) == {0, 1, 2}
        assert meager_violator(gen_path(3), range(3), 1) == frozenset()

    @given(graph_subset_budget(max_f=4), st.data())
    def test_heredity(self, case, data):
        G, X, f = case
        X = frozenset(v for v in X if G.degrees[v] > 0)
        if not is_meager(G, X, f):
            return
        Y = data.draw(st.sets(st.sampled_from(sorted(X)))) if X else set()
        assert is_meager(G, Y, f)

    @given(graph_subset_budget(max_f=4))
    def test_matches_definition(self, case):
        G, X, f = case
        X = frozenset(v for v in X if G.degrees[v] > 0)
        thresh = [f[v] + G.weights[v] for v in G.vertices()]
        violated = any(True for _ in brute_nice_subsets(G, X, thresh))
        assert is_meager(G, X, f) == (not violated)


class TestIsDegenerate:
    def test_large_budget(self):
        G = gen_complete(5)
        assert is_degenerate(G, range(5), [4] * 5)

    def test_triangle(self):
        assert not is_degenerate(gen_tk3(1), range(3), 1)

    def test_tree(self):
        tree = Multigraph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
        assert is_degenerate(tree, range(6), 1)

    @given(graph_subset_budget(max_f=4))
    def test_degenerate_implies_meager(self, case):
        G, X, f = case
        X = frozenset(v for v in X if G.degrees[v] > 0)
        if is_degenerate(G, X, f):
            assert is_meager(G, X, f)

    @given(graph_subset_budget(max_f=4))
    def test_matches_definition(self, case):
        G, X, f = case
        bumped = [x + 1 for x in f]
        assert is_degenerate(G, X, f) == (not any(True for _ in brute_nice_subsets(G, X, bumped)))


class TestMinimalNiceSubset:
    def test_k3_component(self):
        # the K4 occupies ids 0-3 and the K3 ids 4-6
        assert minimal_nice_subset(disjoint_k4_k3(), range(7), 2) == {4, 5, 6}

    def test_result_depends_on_labels(self):
        k3 = [(0, 1), (0, 2), (1, 2)]
        k4 = [(u, v) for u in range(3, 7) for v in range(u + 1, 7)]
        found = minimal_nice_subset(Multigraph(7, k3 + k4), range(7), 2)
        assert len(found) == 3 and is_nice(Multigraph(7, k3 + k4), found, 2)

    def test_zero_budget_gives_singleton(self):
        # removals are tried smallest id first, so the largest id survives
        assert minimal_nice_subset(gen_path(4), {1, 3}, 0) == {3}
        assert len(minimal_nice_subset(gen_complete(5), range(5), 0)) == 1

    def test_none_when_nothing_nice(self):
        assert minimal_nice_subset(gen_path(3), range(3), 2) is None

    @given(graph_subset_budget(max_f=4))
    def test_nice_and_inclusion_minimal(self, case):
        G, X, f = case
        A = minimal_nice_subset(G, X, f)
        if A is None:
            assert not maximal_nice_subset(G, X, f)
            return
        assert A and A <= X and is_nice(G, A, f)
        for v in A:
            assert not maximal_nice_subset(G, A - {v}, f)
        for Z in brute_nice_subsets(G, A, f):
            assert Z == A
        if all(G.degrees[v] > 0 for v in A):
            assert is_meager(G, A, f)


def test_meager_on_random_sets_of_larger_graphs():
    rnd = random.Random(5)
    for _ in range(50):
        n = rnd.randint(8, 16)
        G = Multigraph(n, [(u, v, rnd.randint(1, 3)) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.4])
        X = {v for v in G.vertices() if G.degrees[v] and rnd.random() < 0.6}
        f = [rnd.randint(0, 3) for _ in range(n)]
        Y = meager_violator(G, X, f)
        assert is_nice(G, Y, [f[v] + G.weights[v] for v in range(n)])
