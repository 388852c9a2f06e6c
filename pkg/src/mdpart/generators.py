"""Named instances and seeded random ensembles."""

from __future__ import annotations

import random
from typing import Literal, Optional

from .errors import GenerationError, InputError
from .multigraph import Multigraph
from .niceness import DegreeFunction

# Figure-1 graph: outer 4-cycle u1..u4 (ids 0-3), inner 4-cycle v1..v4
# (ids 4-7), and each v_i joined to two consecutive outer vertices.
CUBE_H_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 0),
    (4, 5), (5, 6), (6, 7), (7, 4),
    (4, 0), (4, 3),
    (5, 0), (5, 1),
    (6, 1), (6, 2),
    (7, 2), (7, 3),
)

# Icosahedron as a gyroelongated pentagonal bipyramid: apex 0, upper ring
# 1-5, lower ring 6-10, apex 11.  Upper i meets lower i+5 and its successor.
ICOSAHEDRON_EDGES = (
    tuple((0, i) for i in range(1, 6))
    + tuple((i, i % 5 + 1) for i in range(1, 6))
    + tuple((i, i + 5) for i in range(1, 6))
    + tuple((i, i % 5 + 6) for i in range(1, 6))
    + tuple((6 + j, 6 + (j + 1) % 5) for j in range(5))
    + tuple((6 + j, 11) for j in range(5))
)


def _positive(t: int, what: str = "t") -> None:
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InputError(f"{what} must be a positive integer, got {t!r}")


def gen_tk3(t: int) -> Multigraph:
    """Three vertices, every pair joined by ``t`` parallel edges."""
    _positive(t)
    return Multigraph(3, [(0, 1, t), (0, 2, t), (1, 2, t)])


def gen_cubeH() -> Multigraph:
    return Multigraph(8, CUBE_H_EDGES)


def gen_icosahedron() -> Multigraph:
    return Multigraph(12, ICOSAHEDRON_EDGES)


def t_multiply(G: Multigraph, t: int) -> Multigraph:
    return G.scaled(t)


def gen_complete(n: int, t: int = 1) -> Multigraph:
    return Multigraph(n, [(u, v, t) for u in range(n) for v in range(u + 1, n)])


def gen_cycle(n: int, t: int = 1) -> Multigraph:
    return Multigraph(n, [(i, (i + 1) % n, t) for i in range(n)])


def gen_path(n: int) -> Multigraph:
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def gen_petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, outer + spokes + inner)


def gen_random(n: int, edge_prob: float, max_mult: int, seed: int) -> Multigraph:
    """Each pair is an edge with probability ``edge_prob``; multiplicities are
    uniform on ``1..max_mult``."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InputError(f"n must be an integer >= 2, got {n!r}")
    if not 0 < edge_prob <= 1:
        raise InputError(f"edge_prob must lie in (0, 1], got {edge_prob!r}")
    _positive(max_mult, "max_mult")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                edges.append((u, v, rng.randint(1, max_mult)))
    return Multigraph(n, edges)


def gen_random_k4minus_free(n: int, edge_prob: float, max_mult: int, seed: int) -> Multigraph:
    """Random K4^- free multigraph by greedy insertion.

    Pairs are visited in random order and each is kept with probability
    ``edge_prob`` provided it creates no edge with two common neighbours.
    ``edge_prob=1`` yields a maximal K4^- free graph.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InputError(f"n must be an integer >= 2, got {n!r}")
    if not 0 < edge_prob <= 1:
        raise InputError(f"edge_prob must lie in (0, 1], got {edge_prob!r}")
    _positive(max_mult, "max_mult")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges = []
    for u, v in pairs:
        if rng.random() >= edge_prob:
            continue
        adj[u].add(v)
        adj[v].add(u)
        # any new K4^- must contain uv, so only edges at u or v can gain a
        # second common neighbour
        if any(len(adj[p] & adj[q]) >= 2 for p in (u, v) for q in adj[p]):
            adj[u].discard(v)
            adj[v].discard(u)
            continue
        edges.append((u, v, rng.randint(1, max_mult)))
    G = Multigraph(n, edges)
    if not G.is_k4minus_free():
        raise GenerationError("greedy insertion produced a K4- (bug)")
    return G


Mode = Literal["theorem1", "theorem3"]


def budget_slack(G: Multigraph, mode: Mode) -> list[int]:
    """Largest admissible ``a(v) + b(v)`` at each vertex for ``mode``."""
    if mode == "theorem1":
        drop = 1
    elif mode == "theorem3":
        drop = 2
    else:
        raise InputError(f"unknown budget mode {mode!r}")
    return [G.degrees[v] - 2 * G.weights[v] + drop for v in G.vertices()]


def gen_random_budgets(
    G: Multigraph,
    mode: Mode,
    seed: int,
    *,
    tight: bool = False,
    minimum: Optional[int] = None,
) -> tuple[DegreeFunction, DegreeFunction]:
    """Random ``(a, b)`` meeting the degree bound of ``mode`` at every vertex.

    Pairs are drawn uniformly from all admissible pairs with both entries at
    least ``minimum`` (default 0 for ``theorem1``, 1 for ``theorem3``).  With
    ``tight`` the sum ``a(v) + b(v)`` equals the bound exactly.
    """
    low = minimum if minimum is not None else (1 if mode == "theorem3" else 0)
    if mode == "theorem3" and low < 1:
        raise InputError("theorem3 budgets must be at least 1")
    rng = random.Random(seed)
    a, b = [], []
    for v, s in enumerate(budget_slack(G, mode)):
        if G.degrees[v] == 0:
            raise GenerationError(f"vertex {v} is isolated")
        if s < 2 * low:
            raise GenerationError(f"no admissible budgets at vertex {v} (a + b <= {s}, each >= {low})")
        if tight:
            pairs = [(x, s - x) for x in range(low, s - low + 1)]
        else:
            pairs = [(x, y) for x in range(low, s + 1) for y in range(low, s - x + 1)]
        x, y = rng.choice(pairs)
        a.append(x)
        b.append(y)
    return DegreeFunction(a), DegreeFunction(b)
