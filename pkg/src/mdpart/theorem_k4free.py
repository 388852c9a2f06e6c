"""Feasible bipartitions of K4^- free multigraphs under the weaker bound.

Hypotheses: no isolated vertices, no edge with two common neighbours,
``a, b >= 1`` and ``d(v) >= a(v) + b(v) + 2 w(v) - 2`` everywhere (triangle-free
graphs are a special case).

The search keeps ``A`` a-meager and ``B`` (b-1)-meager and improves the
potential ``(weight, -|A|)`` lexicographically with one- and two-vertex moves.
Whenever a step turns up an a-nice set and a disjoint b-nice set, the pair is
grown into the answer instead.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Optional

from .errors import InputError, InvariantError
from .multigraph import Multigraph
from .niceness import DegreeFunction, is_meager, is_nice, maximal_nice_subset, minimal_nice_subset
from .partition_engine import BudgetLike, PartitionState, SearchTrace, extend_feasible_pair
from .theorem_general import PartitionResult, PreconditionReport, _degree_violations, _finish


def check_theorem3_precondition(G: Multigraph, a: BudgetLike, b: BudgetLike) -> PreconditionReport:
    a = DegreeFunction.coerce(a, G.n)
    b = DegreeFunction.coerce(b, G.n)
    violations = []
    iso = G.isolated_vertices()
    if G.n == 0:
        violations.append("graph is empty")
    if iso:
        violations.append(f"isolated vertices {iso}")
    witness = G.k4minus_witness()
    if witness is not None:
        u, v, w1, w2 = witness
        violations.append(f"graph contains K4-: edge {u}-{v} has common neighbours {w1} and {w2}")
    low = [v for v in G.vertices() if a[v] < 1 or b[v] < 1]
    if low:
        violations.append(f"budgets must be >= 1; fails at vertices {low}")
    violations += _degree_violations(G, a, b, 2)
    if not violations and G.n <= 3:
        # n = 2 contradicts the bound; on n = 3 only tK3 with a = b = 1 meets
        # it, and that instance has no feasible partition at all.
        violations.append(f"no feasible partition exists on {G.n} vertices under this bound "
                          "(the three-vertex case is tK3 with a = b = 1)")
    return PreconditionReport(not violations, violations)


def _small_side(G: Multigraph, u: int, v: int, f: DegreeFunction) -> frozenset[int]:
    common = G.common_neighbors(u, v)
    if not common:
        return frozenset({u, v})
    w = common[0]
    return frozenset({u, v, w}) if f[w] == 1 else frozenset({u, v})


def edge_budget_preprocess(
    G: Multigraph, a: BudgetLike, b: BudgetLike
) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Return a feasible partition if some edge has both b-budgets (or both
    a-budgets) equal to 1, else ``None``.

    The two (or three) low-budget vertices form one side and everything else
    the other; K4^- freeness keeps the big side's degrees high enough.
    """
    a = DegreeFunction.coerce(a, G.n)
    b = DegreeFunction.coerce(b, G.n)
    V = frozenset(G.vertices())
    for u, v, _ in G.edges():
        if b[u] + b[v] < 3:
            small = _small_side(G, u, v, b)
            A, B = V - small, small
        elif a[u] + a[v] < 3:
            small = _small_side(G, u, v, a)
            A, B = small, V - small
        else:
            continue
        from .oracle import check_partition

        problems = check_partition(G, A, B, a, b)
        if problems:
            raise InvariantError(f"edge construction on {u}-{v} failed: " + "; ".join(problems))
        return A, B
    return None


class _Search:
    def __init__(self, G: Multigraph, a: DegreeFunction, b: DegreeFunction, state: PartitionState,
                 trace: SearchTrace, check_invariants: bool) -> None:
        self.G, self.a, self.b = G, a, b
        self.b_low = b.minus(1)
        self.b_low_w = self.b_low + G.weights
        self.a_w = a + G.weights
        self.state = state
        self.trace = trace
        self.check_invariants = check_invariants

    def shift(self, moving: Sequence[int], keep: frozenset[int], tag: str) -> Optional[tuple[frozenset[int], frozenset[int], str]]:
        """Move ``moving`` from A to B unless B would stop being (b-1)-meager.

        ``keep`` is a nonempty a-nice subset of what stays in A.  If the grown
        B contains a (b-1+w)-nice set, that set is b-nice and together with
        ``keep`` forms a feasible pair, which is extended and returned.
        """
        G, state = self.G, self.state
        grown = state.B | frozenset(moving)
        core = maximal_nice_subset(G, grown, self.b_low_w)
        if core:
            if not is_nice(G, core, self.b):
                raise InvariantError("(b-1+w)-nice core is not b-nice")
            if keep & core or not keep:
                raise InvariantError("feasible pair sides overlap or are empty")
            return (*extend_feasible_pair(G, keep, core, self.a, self.b), f"pair@{tag}")
        before = (state.weight, state.size_a)
        for x in moving:
            state._move_to_b(x)
        self.trace.record(f"to_b.{tag}" if len(moving) == 1 else "pair_to_b", moving, state, *before)
        self.check_progress(before)
        return None

    def check_progress(self, before: tuple[int, int]) -> None:
        w0, s0 = before
        w1, s1 = self.state.weight, self.state.size_a
        if not (w1 > w0 or (w1 == w0 and s1 < s0)):
            raise InvariantError(f"no lexicographic progress: (w={w0}, |A|={s0}) -> (w={w1}, |A|={s1})")

    def step(self) -> Optional[tuple[frozenset[int], frozenset[int], str]]:
        G, a, b, state = self.G, self.a, self.b, self.state
        w = G.weights
        A, B = state.A, state.B
        if self.check_invariants:
            state.check_caches()
            if not is_meager(G, A, a):
                raise InvariantError("A is not a-meager")
            if not is_meager(G, B, self.b_low):
                raise InvariantError("B is not (b-1)-meager")
        before = (state.weight, state.size_a)

        if state.size_b == 1:
            x = next((v for v in sorted(A) if state.dA[v] <= a[v] + w[v] - 1), None)
            if x is None:
                raise InvariantError("A has no meager witness")
            state._move_to_b(x)
            self.trace.record("to_b.singleton", (x,), state, *before)
            self.check_progress(before)
            return None

        y = next((v for v in sorted(B) if state.dB[v] <= b[v] + w[v] - 2), None)
        if y is None:
            raise InvariantError("B has no (b-1)-meager witness")
        grown = maximal_nice_subset(G, A | {y}, self.a_w)
        if not grown:
            state._move_to_a(y)
            self.trace.record("to_a", (y,), state, *before)
            self.check_progress(before)
            return None
        if y not in grown:
            raise InvariantError("A holds an (a+w)-nice set although it is a-meager")
        core = grown - {y}
        if not core or not is_nice(G, core, a):
            raise InvariantError("core of A + y is not a nonempty a-nice set")

        deficient = next((v for v in sorted(A) if state.dA[v] < a[v]), None)
        if deficient is not None:
            if deficient in core:
                raise InvariantError("deficient vertex lies in the a-nice core")
            return self.shift([deficient], core, "deficient")

        low = [u for u in sorted(A) if state.dA[u] <= a[u] + w[u] - 1]
        if not low:
            raise InvariantError("A is a-nice but has no meager witness")
        outside = [u for u in low if u not in core]
        if outside:
            return self.shift([outside[0]], core, "outside")

        if any(G.multiplicity(u, y) == 0 for u in low):
            raise InvariantError("low-degree vertex of A is not adjacent to y")
        x = low[0]
        low_set = frozenset(low)
        partners = [z for z in sorted(G.neighbors(x)) if z in low_set]
        if not partners:
            rest = A - {x}
            if not rest or not is_nice(G, rest, a):
                raise InvariantError("A - x is not a nonempty a-nice set")
            return self.shift([x], rest, "lone")

        z = partners[0]
        rest = A - {x, z}
        if not rest:
            # A = {x, z} and x, y, z span a triangle; every other vertex has
            # at most one neighbour in it.  Under the hypotheses this forces
            # B = {y} (peeling B must start at a common neighbour of x and z),
            # which the singleton case already handled, so this is a guard.
            return A | {y}, B - {y}, "triangle"
        if not is_nice(G, rest, a):
            raise InvariantError("A - {x, z} is not a-nice")
        return self.shift([x, z], rest, "two")


def theorem3_partition(G: Multigraph, a: BudgetLike, b: BudgetLike, *, check_invariants: bool = False) -> PartitionResult:
    """Return an (a,b)-feasible partition of a K4^- free multigraph under
    ``d(v) >= a(v) + b(v) + 2 w(v) - 2``."""
    a = DegreeFunction.coerce(a, G.n)
    b = DegreeFunction.coerce(b, G.n)
    report = check_theorem3_precondition(G, a, b)
    if not report:
        raise InputError(report.message())
    trace = SearchTrace()

    direct = edge_budget_preprocess(G, a, b)
    if direct is not None:
        return _finish(G, *direct, a, b, trace, "edge-preprocess")

    V = frozenset(G.vertices())
    A = minimal_nice_subset(G, V, a)
    if A is None or A == V:
        raise InvariantError("no proper minimal a-nice subset")
    core_b = maximal_nice_subset(G, V - A, b)
    if core_b:
        return _finish(G, *extend_feasible_pair(G, A, core_b, a, b), a, b, trace, "pair")

    search = _Search(G, a, b, PartitionState(G, A, a, b), trace, check_invariants)
    limit = (G.num_edges() + sum(a) + sum(b) + 1) * (G.n + 1)
    while True:
        out = search.step()
        if out is not None:
            A, B, how = out
            return _finish(G, A, B, a, b, trace, how)
        if len(trace) > limit:
            raise InvariantError(f"search exceeded {limit} moves")
