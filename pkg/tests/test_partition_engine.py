import pytest
from hypothesis import given
from hypothesis import strategies as st

from mdpart import (
    InputError,
    MoveRecord,
    Multigraph,
    PartitionState,
    SearchTrace,
    StateError,
    extend_feasible_pair,
    is_nice,
    move_to_A,
    move_to_B,
    partition_weight,
)
from mdpart.generators import gen_complete, gen_tk3
from mdpart.oracle import check_partition

from conftest import multigraphs


@st.composite
def states(draw, max_n: int = 8):
    G = draw(multigraphs(min_n=2, max_n=max_n))
    A = draw(st.sets(st.integers(0, G.n - 1), min_size=1, max_size=G.n - 1))
    a = draw(st.lists(st.integers(0, 4), min_size=G.n, max_size=G.n))
    b = draw(st.lists(st.integers(0, 4), min_size=G.n, max_size=G.n))
    return PartitionState(G, A, a, b)


class TestMoveToB:
    def test_symmetric_vertex_is_neutral(self):
        # vertex 0 has one neighbour on each side and equal budgets
        G = Multigraph(3, [(0, 1), (0, 2)])
        S = PartitionState(G, {0, 1}, 2, 2)
        assert S.delta_to_b(0) == 0
        assert move_to_B(S, 0).weight == S.weight

    def test_k4(self):
        S = PartitionState(gen_complete(4), {0, 1, 2}, 1, 1)
        T = move_to_B(S, 0)
        assert T.weight - S.weight == 1 - 2 + 1 - 1
        assert T.A == {1, 2} and T.B == {0, 3}

    def test_tk3(self):
        S = PartitionState(gen_tk3(2), {0, 1}, 1, 1)
        assert move_to_B(S, 0).weight - S.weight == 0

    def test_last_vertex_cannot_leave(self):
        S = PartitionState(gen_complete(3), {0}, 1, 1)
        with pytest.raises(StateError):
            move_to_B(S, 0)

    def test_wrong_side(self):
        S = PartitionState(gen_complete(4), {0, 1}, 1, 1)
        with pytest.raises(InputError, match="already in B"):
            move_to_B(S, 3)


class TestMoveToA:
    def test_k4(self):
        S = PartitionState(gen_complete(4), {0}, 1, 1)
        assert move_to_A(S, 1).weight - S.weight == 1 - 2 + 0

    def test_star_leaf(self):
        star = Multigraph(4, [(0, 1), (0, 2), (0, 3)])
        S = PartitionState(star, {1}, 1, 1)
        assert move_to_A(S, 2).weight - S.weight == 0 - 1 + 0

    def test_mirror_of_move_to_b(self):
        G = gen_complete(4)
        S = PartitionState(G, {0, 1, 2}, [1, 2, 0, 3], [2, 0, 1, 1])
        mirror = PartitionState(G, {3}, [2, 0, 1, 1], [1, 2, 0, 3])
        assert S.delta_to_b(0) == mirror.delta_to_a(0)

    def test_last_vertex_cannot_leave(self):
        S = PartitionState(gen_complete(3), {0, 1}, 1, 1)
        with pytest.raises(StateError):
            move_to_A(S, 2)


def test_empty_side_rejected():
    with pytest.raises(StateError):
        PartitionState(gen_complete(3), set(), 1, 1)
    with pytest.raises(StateError):
        PartitionState(gen_complete(3), {0, 1, 2}, 1, 1)


@given(states(), st.lists(st.integers(0, 7), max_size=12))
def test_delta_matches_recomputation(S, picks):
    G = S.G
    for pick in picks:
        v = pick % G.n
        if S.in_a[v] and S.size_a > 1:
            closed = S.dB[v] - S.dA[v] + S.a[v] - S.b[v]
            T = move_to_B(S, v)
        elif not S.in_a[v] and S.size_b > 1:
            closed = S.dA[v] - S.dB[v] + S.b[v] - S.a[v]
            T = move_to_A(S, v)
        else:
            continue
        assert T.weight - S.weight == closed
        assert T.weight == partition_weight(G, T.A, T.B, T.a, T.b)
        T.check_caches()
        for u in G.vertices():
            assert T.dA[u] == G.degree_into(u, T.A)
            assert T.dB[u] == G.degree_into(u, T.B)
            assert T.dA[u] + T.dB[u] == G.degrees[u]
        S = T


@given(states())
def test_value_semantics(S):
    snapshot = (S.A, S.weight, list(S.dA), list(S.dB))
    v = min(S.A)
    if S.size_a > 1:
        move_to_B(S, v)
    assert (S.A, S.weight, list(S.dA), list(S.dB)) == snapshot


@given(states(), st.lists(st.integers(0, 7), max_size=10))
def test_trace_replays(S, picks):
    trace = SearchTrace()
    live = S.copy()
    for pick in picks:
        v = pick % S.G.n
        before = (live.weight, live.size_a)
        if live.in_a[v] and live.size_a > 1:
            live._move_to_b(v)
            trace.record("to_b", (v,), live, *before)
        elif not live.in_a[v] and live.size_b > 1:
            live._move_to_a(v)
            trace.record("to_a", (v,), live, *before)
    parsed = SearchTrace.from_text(trace.to_text())
    assert parsed.records == trace.records
    assert parsed.replay(S).A == live.A


def test_trace_line_format():
    rec = MoveRecord("pair_to_b", (3, 5), 10, 12, 4, 2)
    assert rec.to_line() == "MOVE pair_to_b 3,5 w:10->12 |A|:4->2"
    assert MoveRecord.from_line(rec.to_line()) == rec
    with pytest.raises(InputError):
        MoveRecord.from_line("MOVE to_b 3 w:1 |A|:2->1")


class TestExtendFeasiblePair:
    def test_already_a_partition(self):
        G = gen_complete(4)
        assert extend_feasible_pair(G, {0, 1}, {2, 3}, 1, 1) == ({0, 1}, {2, 3})

    def test_k5_leftover_joins_b(self):
        assert extend_feasible_pair(gen_complete(5), {0, 1}, {2, 3}, 1, 1) == ({0, 1}, {2, 3, 4})

    def test_singleton_b_is_not_nice(self):
        # a lone vertex has no neighbours inside its side, so b = 1 fails
        with pytest.raises(InputError, match="B0 is not b-nice"):
            extend_feasible_pair(gen_complete(5), {0, 1, 2}, {3}, 2, 1)

    def test_k5_with_unequal_budgets(self):
        A, B = extend_feasible_pair(gen_complete(5), {0, 1, 2}, {3, 4}, 2, 1)
        assert (A, B) == ({0, 1, 2}, {3, 4})

    def test_leftover_pushed_to_a(self):
        # vertex 4 hangs off A0 by a triple edge and touches B0 once
        G = Multigraph(5, [(0, 1, 3), (2, 3, 1), (4, 0, 3), (4, 1, 3), (4, 2, 1)])
        a, b = [1, 1, 1, 1, 2], [1, 1, 1, 1, 2]
        A, B = extend_feasible_pair(G, {0, 1}, {2, 3}, a, b)
        assert A == {0, 1, 4} and B == {2, 3}

    @pytest.mark.parametrize(
        "A0,B0,match",
        [(set(), {1}, "nonempty"), ({0, 1}, {1, 2}, "disjoint"), ({0}, {1, 2}, "A0 is not a-nice")],
    )
    def test_bad_inputs(self, A0, B0, match):
        with pytest.raises(InputError, match=match):
            extend_feasible_pair(gen_complete(4), A0, B0, 1, 1)

    def test_degree_bound_checked(self):
        with pytest.raises(InputError, match="degree bound"):
            extend_feasible_pair(gen_complete(5), {0, 1, 2, 3}, {4}, 3, 3)

    def test_isolated_rejected(self):
        G = Multigraph(5, [(0, 1), (2, 3)])
        with pytest.raises(InputError, match="isolated"):
            extend_feasible_pair(G, {0, 1}, {2, 3}, 0, 0)

    @given(multigraphs(min_n=3, max_n=9), st.data())
    def test_random_pairs_extend(self, G, data):
        G, _ = G.strip_isolated()
        if G.n < 2:
            return
        slack = [G.degrees[v] - 2 * G.weights[v] + 3 for v in G.vertices()]
        if min(slack) < 0:
            return
        a = [data.draw(st.integers(0, s)) for s in slack]
        b = [data.draw(st.integers(0, s - x)) for s, x in zip(slack, a)]
        A0 = frozenset(data.draw(st.sets(st.sampled_from(range(G.n)), min_size=1)))
        rest = sorted(set(G.vertices()) - A0)
        if not rest:
            return
        B0 = frozenset(data.draw(st.sets(st.sampled_from(rest), min_size=1)))
        if not (is_nice(G, A0, a) and is_nice(G, B0, b)):
            return
        A, B = extend_feasible_pair(G, A0, B0, a, b)
        assert A0 <= A and B0 <= B
        assert check_partition(G, A, B, a, b) == []
