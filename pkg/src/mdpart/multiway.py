"""p-way partitions by repeated two-way splitting, and the constant-budget case."""

from __future__ import annotations

from collections.abc import Sequence

from .errors import InputError
from .multigraph import Multigraph
from .niceness import DegreeFunction
from .partition_engine import BudgetLike
from .theorem_general import PartitionResult, theorem1_partition
from .theorem_k4free import theorem3_partition


def check_multiway_precondition(G: Multigraph, fs: Sequence[Sequence[int]], h: int) -> list[str]:
    """Violations of the p-way hypotheses (empty list when they all hold)."""
    if h not in (1, 2):
        return [f"h must be 1 or 2, got {h!r}"]
    p = len(fs)
    problems = []
    if p < 2:
        problems.append(f"need at least two budgets, got {p}")
    for i, f in enumerate(fs):
        if len(f) != G.n:
            problems.append(f"budget {i} has {len(f)} entries, graph has {G.n} vertices")
            return problems
        low = [v for v in G.vertices() if f[v] < h - 1]
        if low:
            problems.append(f"budget {i} is below {h - 1} at vertices {low}")
    iso = G.isolated_vertices()
    if iso:
        problems.append(f"isolated vertices {iso}")
    if h == 2:
        witness = G.k4minus_witness()
        if witness is not None:
            u, v, w1, w2 = witness
            problems.append(f"graph contains K4-: edge {u}-{v} has common neighbours {w1} and {w2}")
    for v in G.vertices():
        need = sum(f[v] for f in fs) + (p - 1) * (2 * G.weights[v] - h)
        if G.degrees[v] < need:
            problems.append(f"degree bound fails at vertex {v}: {G.degrees[v]} < {need}")
    return problems


def multiway_partition(
    G: Multigraph, fs: Sequence[BudgetLike], h: int = 1, *, check_invariants: bool = False
) -> list[frozenset[int]]:
    """Split ``V(G)`` into parts ``A_1..A_p`` with ``d_{A_i}(v) >= f_i(v)``.

    Requires ``d(v) >= sum_i f_i(v) + (p - 1)(2 w(v) - h)``; ``h = 2`` also
    needs a K4^- free graph and budgets ``>= 1``.  The first part is split
    off against the merged budget of the rest, which is then split
    recursively inside the induced subgraph.
    """
    budgets = [DegreeFunction.coerce(f, G.n) for f in fs]
    return _split(G, list(range(G.n)), budgets, h, 1, check_invariants)


def _split(G: Multigraph, labels: list[int], fs: list[DegreeFunction], h: int, level: int,
           check_invariants: bool) -> list[frozenset[int]]:
    problems = check_multiway_precondition(G, fs, h)
    if problems:
        raise InputError(f"level {level}: " + "; ".join(problems))
    p = len(fs)
    if p == 2:
        res = _solve(G, fs[0], fs[1], h, level, check_invariants)
        return [_relabel(res.A, labels), _relabel(res.B, labels)]
    rest = DegreeFunction(
        sum(f[v] for f in fs[1:]) + (p - 2) * (2 * G.weights[v] - h) for v in G.vertices()
    )
    res = _solve(G, fs[0], rest, h, level, check_invariants)
    sub, keep = G.induced_subgraph(res.B)
    sub_fs = [DegreeFunction(f[v] for v in keep) for f in fs[1:]]
    return [_relabel(res.A, labels)] + _split(sub, [labels[v] for v in keep], sub_fs, h, level + 1,
                                              check_invariants)


def _solve(G: Multigraph, a: DegreeFunction, b: DegreeFunction, h: int, level: int,
           check_invariants: bool) -> PartitionResult:
    solve = theorem1_partition if h == 1 else theorem3_partition
    try:
        return solve(G, a, b, check_invariants=check_invariants)
    except InputError as exc:
        # with h = 2 a residual graph can be the three-vertex exception
        raise InputError(f"level {level}: {exc}") from exc


def _relabel(part: frozenset[int], labels: list[int]) -> frozenset[int]:
    return frozenset(labels[v] for v in part)


def check_constant_precondition(G: Multigraph, s: int, t: int) -> list[str]:
    problems = []
    for name, x in (("s", s), ("t", t)):
        if isinstance(x, bool) or not isinstance(x, int) or x < 0:
            problems.append(f"{name} must be a nonnegative integer, got {x!r}")
    if problems:
        return problems
    need = s + t + 2 * G.max_multiplicity() - 1
    if need < 1:
        problems.append("s + t + 2 mu(G) - 1 must be at least 1 (graph has no edges)")
    if G.min_degree() < need:
        problems.append(f"minimum degree {G.min_degree()} < s + t + 2 mu(G) - 1 = {need}")
    return problems


def corollary_constant(G: Multigraph, s: int, t: int) -> PartitionResult:
    """Partition with ``min degree(G[A]) >= s`` and ``min degree(G[B]) >= t``
    whenever ``min degree(G) >= s + t + 2 mu(G) - 1 >= 1``."""
    problems = check_constant_precondition(G, s, t)
    if problems:
        raise InputError("; ".join(problems))
    return theorem1_partition(G, s, t)
