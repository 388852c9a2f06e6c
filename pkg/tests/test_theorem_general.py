import pytest
from hypothesis import given
from hypothesis import strategies as st

from mdpart import (
    GenerationError,
    InputError,
    Multigraph,
    PartitionState,
    check_theorem1_precondition,
    is_meager,
    theorem1_partition,
)
from mdpart.generators import gen_complete, gen_petersen, gen_random, gen_random_budgets, gen_tk3
from mdpart.oracle import check_partition, exists_feasible_partition

from conftest import brute_feasible_splits, multigraphs


class TestPrecondition:
    @pytest.mark.parametrize("t", [1, 2, 3, 5])
    def test_tk3_fails(self, t):
        report = check_theorem1_precondition(gen_tk3(t), 1, 1)
        assert not report
        assert f"degree bound fails at vertex 0: {2 * t} < {2 * t + 1}" in report.violations

    def test_k4(self):
        assert check_theorem1_precondition(gen_complete(4), 1, 1)

    def test_doubled_k5(self):
        assert check_theorem1_precondition(gen_complete(5, t=2), 2, 3)

    def test_isolated(self):
        report = check_theorem1_precondition(Multigraph(3, [(0, 1, 5)]), 0, 0)
        assert not report and "isolated vertices [2]" in report.message()

    def test_empty_graph(self):
        assert not check_theorem1_precondition(Multigraph(0), [], [])


class TestPartition:
    def test_k4_perfect_matching(self):
        A, B, _ = theorem1_partition(gen_complete(4), 1, 1)
        assert len(A) == len(B) == 2
        assert (A, B) in set(brute_feasible_splits(gen_complete(4), [1] * 4, [1] * 4))

    def test_zero_a_shortcut(self):
        G = gen_petersen()
        res = theorem1_partition(G, 0, 2)
        assert (res.A, res.B, res.how) == ({0}, frozenset(range(1, 10)), "zero-a")

    def test_zero_b_shortcut(self):
        G = gen_complete(5)
        res = theorem1_partition(G, 1, [1, 1, 1, 0, 0])
        assert res.B == {3} and res.how == "zero-b"

    def test_doubled_k5(self):
        G = gen_complete(5, t=2)
        res = theorem1_partition(G, 2, 3, check_invariants=True)
        assert check_partition(G, res.A, res.B, 2, 3) == []
        assert (res.A, res.B) in set(brute_feasible_splits(G, [2] * 5, [3] * 5))

    def test_rejects_tk3(self):
        with pytest.raises(InputError, match="degree bound fails"):
            theorem1_partition(gen_tk3(2), 1, 1)

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_tk3_has_no_partition_at_the_weaker_bound(self, t):
        assert exists_feasible_partition(gen_tk3(t), 1, 1) is None

    def test_result_unpacks(self):
        A, B, trace = theorem1_partition(gen_complete(6), 2, 1)
        assert A | B == set(range(6)) and len(trace) >= 0

    @given(multigraphs(min_n=2, max_n=9), st.integers(0, 10**6))
    def test_random_instances(self, G, seed):
        G, _ = G.strip_isolated()
        if G.n == 0:
            return
        try:
            a, b = gen_random_budgets(G, "theorem1", seed)
        except GenerationError:
            return
        res = theorem1_partition(G, a, b, check_invariants=True)
        assert check_partition(G, res.A, res.B, a, b) == []
        assert len(res.trace) <= G.num_edges() + sum(a) + sum(b)
        assert res.final_weight == PartitionState(G, res.A, a, b).weight
        if G.n <= 9:
            assert (res.A, res.B) in set(brute_feasible_splits(G, a, b))


def test_search_trace_is_monotone_and_meager():
    # positive budgets force the local search to run
    hits = 0
    for seed in range(150):
        G = gen_random(9, 0.9, 1 + seed % 2, seed)
        try:
            a, b = gen_random_budgets(G, "theorem1", seed, minimum=1, tight=True)
        except GenerationError:
            continue
        res = theorem1_partition(G, a, b, check_invariants=True)
        if not res.trace.records:
            continue
        hits += 1
        first = res.trace.records[0]
        state = PartitionState(G, _initial_side(G, a), a, b)
        assert state.weight == first.weight_before
        end = res.trace.replay(state)
        for rec in res.trace:
            assert rec.weight_after > rec.weight_before
        assert is_meager(G, end.A, a) and is_meager(G, end.B, b)
    assert hits >= 30


def _initial_side(G, a):
    from mdpart import minimal_nice_subset

    return minimal_nice_subset(G, G.vertices(), a)
