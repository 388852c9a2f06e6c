"""Feasible bipartitions of general multigraphs.

For a multigraph without isolated vertices and budgets ``a, b >= 0`` with
``d(v) >= a(v) + b(v) + 2 w(v) - 1`` at every vertex, a partition ``(A, B)``
with ``A`` a-nice and ``B`` b-nice always exists.  The search below keeps
``(A, B)`` a meager partition (``A`` a-meager, ``B`` b-meager) and moves one
vertex per step, each move raising the (a,b)-weight by at least one, until
both sides contain a nice core; the cores are then grown into a partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InvariantError
from .multigraph import Multigraph
from .niceness import DegreeFunction, is_meager, maximal_nice_subset, minimal_nice_subset
from .partition_engine import BudgetLike, PartitionState, SearchTrace, extend_feasible_pair


@dataclass
class PreconditionReport:
    ok: bool
    violations: list[str]

    def __bool__(self) -> bool:
        return self.ok

    def message(self) -> str:
        return "; ".join(self.violations) if self.violations else "ok"


@dataclass
class PartitionResult:
    A: frozenset[int]
    B: frozenset[int]
    trace: SearchTrace
    final_weight: int
    how: str

    def __iter__(self):
        # allows ``A, B, trace = theorem1_partition(...)``
        return iter((self.A, self.B, self.trace))


def _degree_violations(G: Multigraph, a: DegreeFunction, b: DegreeFunction, slack: int) -> list[str]:
    out = []
    for v in G.vertices():
        need = a[v] + b[v] + 2 * G.weights[v] - slack
        if G.degrees[v] < need:
            out.append(f"degree bound fails at vertex {v}: {G.degrees[v]} < {need}")
    return out


def check_theorem1_precondition(G: Multigraph, a: BudgetLike, b: BudgetLike) -> PreconditionReport:
    """Check ``min degree >= 1`` and ``d(v) >= a(v) + b(v) + 2 w(v) - 1`` everywhere."""
    a = DegreeFunction.coerce(a, G.n)
    b = DegreeFunction.coerce(b, G.n)
    violations = []
    if G.n == 0:
        violations.append("graph is empty")
    iso = G.isolated_vertices()
    if iso:
        violations.append(f"isolated vertices {iso}")
    violations += _degree_violations(G, a, b, 1)
    return PreconditionReport(not violations, violations)


def theorem1_partition(G: Multigraph, a: BudgetLike, b: BudgetLike, *, check_invariants: bool = False) -> PartitionResult:
    """Return an (a,b)-feasible partition under the general degree bound.

    With ``check_invariants`` every iteration re-verifies the cached state and
    the meagerness of both sides.
    """
    a = DegreeFunction.coerce(a, G.n)
    b = DegreeFunction.coerce(b, G.n)
    report = check_theorem1_precondition(G, a, b)
    if not report:
        raise InputError(report.message())
    trace = SearchTrace()
    V = frozenset(G.vertices())

    # a zero budget lets a single vertex form its own side
    for v in G.vertices():
        if a[v] == 0:
            return _finish(G, frozenset({v}), V - {v}, a, b, trace, "zero-a")
    for v in G.vertices():
        if b[v] == 0:
            return _finish(G, V - {v}, frozenset({v}), a, b, trace, "zero-b")

    A = minimal_nice_subset(G, V, a)
    if A is None or A == V:
        raise InvariantError("no proper minimal a-nice subset")
    state = PartitionState(G, A, a, b)
    w = G.weights
    bound = G.num_edges() + sum(a) + sum(b)

    while True:
        cur_A, cur_B = state.A, state.B
        if check_invariants:
            state.check_caches()
            if not (is_meager(G, cur_A, a) and is_meager(G, cur_B, b)):
                # only the initial state may have a non-meager B, and then
                # B holds a b-nice core and we exit below
                if trace.records or not maximal_nice_subset(G, cur_B, b):
                    raise InvariantError("partition is not (a,b)-meager")
        core_a = maximal_nice_subset(G, cur_A, a)
        core_b = maximal_nice_subset(G, cur_B, b)
        if core_a and core_b:
            A, B = extend_feasible_pair(G, core_a, core_b, a, b)
            return _finish(G, A, B, a, b, trace, "search")

        w_before, size_before = state.weight, state.size_a
        if not core_a:
            y = next((v for v in sorted(cur_B) if state.dB[v] <= b[v] + w[v] - 1), None)
            if y is None:
                raise InvariantError("B has no meager witness")
            state._move_to_a(y)
            trace.record("to_a", (y,), state, w_before, size_before)
        else:
            x = next((v for v in sorted(cur_A) if state.dA[v] <= a[v] + w[v] - 1), None)
            if x is None:
                raise InvariantError("A has no meager witness")
            state._move_to_b(x)
            trace.record("to_b", (x,), state, w_before, size_before)
        if state.weight <= w_before:
            raise InvariantError(f"move did not raise the weight ({w_before} -> {state.weight})")
        if len(trace) > bound:
            raise InvariantError(f"move count exceeded {bound}")


def _finish(G: Multigraph, A: frozenset[int], B: frozenset[int], a: DegreeFunction, b: DegreeFunction,
            trace: SearchTrace, how: str) -> PartitionResult:
    from .oracle import check_partition

    problems = check_partition(G, A, B, a, b)
    if problems:
        raise InvariantError("produced partition is infeasible: " + "; ".join(problems))
    final = PartitionState(G, A, a, b).weight
    return PartitionResult(A, B, trace, final, how)
