"""Pure-Python kernels; the reference twin of ``_ckernels.pyx``.

Both modules expose the same three functions with identical results:

* ``peel`` -- iterated deletion of budget violators (maximal nice subset),
* ``find_feasible_split`` -- first feasible bipartition by exhaustive search,
* ``find_nice_subset`` -- first nice subset of a vertex mask by exhaustive search.

Masks passed to and returned from the enumeration kernels are integers with
bit ``v`` standing for vertex ``v``.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import combinations

IMPLEMENTATION = "python"


def peel(
    indptr: Sequence[int],
    indices: Sequence[int],
    mults: Sequence[int],
    member: bytearray,
    budget: Sequence[int],
) -> bytearray:
    """Return the largest subset of ``member`` in which every vertex ``v``
    has inner degree at least ``budget[v]``."""
    n = len(member)
    alive = bytearray(member)
    deg = [0] * n
    for v in range(n):
        if alive[v]:
            s = 0
            for j in range(indptr[v], indptr[v + 1]):
                if alive[indices[j]]:
                    s += mults[j]
            deg[v] = s
    stack = [v for v in range(n - 1, -1, -1) if alive[v] and deg[v] < budget[v]]
    queued = bytearray(n)
    for v in stack:
        queued[v] = 1
    while stack:
        v = stack.pop()
        alive[v] = 0
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            if alive[u]:
                deg[u] -= mults[j]
                if not queued[u] and deg[u] < budget[u]:
                    queued[u] = 1
                    stack.append(u)
    return alive


def _split_ok(rows: list[list[int]], n: int, mask: int, a: Sequence[int], b: Sequence[int]) -> bool:
    for v in range(n):
        row = rows[v]
        inside = mask >> v & 1
        d = 0
        for u in range(n):
            if (mask >> u & 1) == inside:
                d += row[u]
        if d < (a[v] if inside else b[v]):
            return False
    return True


def find_feasible_split(n: int, dense: Sequence[int], a: Sequence[int], b: Sequence[int]) -> int:
    """First ``A`` (by size, then lexicographically by sorted ids) with ``A``
    a-nice and its complement b-nice, both nonempty; ``-1`` if none."""
    rows = [list(dense[v * n:(v + 1) * n]) for v in range(n)]
    for k in range(1, n):
        for combo in combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _split_ok(rows, n, mask, a, b):
                return mask
    return -1


def find_nice_subset(n: int, dense: Sequence[int], xmask: int, thresh: Sequence[int]) -> int:
    """First nonempty ``Y`` within ``xmask`` (numeric order) whose members all
    satisfy ``d_Y(v) >= thresh[v]``; ``-1`` if none."""
    rows = [list(dense[v * n:(v + 1) * n]) for v in range(n)]
    sub = (0 - xmask) & xmask
    while sub:
        ok = True
        for v in range(n):
            if sub >> v & 1:
                row = rows[v]
                d = 0
                for u in range(n):
                    if sub >> u & 1:
                        d += row[u]
                if d < thresh[v]:
                    ok = False
                    break
        if ok:
            return sub
        sub = (sub - xmask) & xmask
    return -1
