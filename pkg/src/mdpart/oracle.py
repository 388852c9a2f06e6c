"""Exhaustive ground truth for small instances.

Everything here works straight from the definitions, by enumerating
subsets, and never calls the peeling code or the search algorithms.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Sequence
from dataclasses import asdict, dataclass
from typing import Optional

from . import kernels
from .errors import EnumerationCapError, InputError
from .multigraph import Multigraph

DEFAULT_CAP = 20
CAP_ENV = "MDPART_ENUM_CAP"


def enumeration_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    return min(cap, 62)


def _check_cap(size: int, cap: Optional[int]) -> None:
    limit = enumeration_cap() if cap is None else cap
    if size > limit:
        raise EnumerationCapError(f"enumeration over {size} vertices exceeds the cap of {limit}")


def _values(f: Sequence[int] | int, n: int) -> list[int]:
    if isinstance(f, int):
        return [f] * n
    vals = list(f)
    if len(vals) != n:
        raise InputError(f"budget has {len(vals)} entries, graph has {n} vertices")
    return vals


def check_partition(
    G: Multigraph,
    A: Iterable[int],
    B: Iterable[int],
    a: Sequence[int] | int,
    b: Sequence[int] | int,
) -> list[str]:
    """List every way ``(A, B)`` fails to be an (a,b)-feasible partition.

    An empty list means the partition is feasible.
    """
    A, B = set(A), set(B)
    a, b = _values(a, G.n), _values(b, G.n)
    problems = []
    if not A:
        problems.append("side A is empty")
    if not B:
        problems.append("side B is empty")
    if A & B:
        problems.append(f"sides overlap on {sorted(A & B)}")
    outside = set(range(G.n)) - A - B
    if outside:
        problems.append(f"vertices {sorted(outside)} are unassigned")
    stray = (A | B) - set(range(G.n))
    if stray:
        problems.append(f"unknown vertices {sorted(stray)}")
        return problems
    for side, name, f in ((A, "A", a), (B, "B", b)):
        for v in sorted(side):
            d = sum(G.multiplicity(v, u) for u in side if u != v)
            if d < f[v]:
                problems.append(f"vertex {v} in {name} has inner degree {d} < {f[v]}")
    return problems


def check_multiway(G: Multigraph, parts: Sequence[Iterable[int]], fs: Sequence[Sequence[int]]) -> list[str]:
    """Feasibility check for a p-way partition against budgets ``fs``."""
    parts = [set(p) for p in parts]
    problems = []
    if len(parts) != len(fs):
        problems.append(f"{len(parts)} parts for {len(fs)} budgets")
    seen: set[int] = set()
    for i, part in enumerate(parts):
        if not part:
            problems.append(f"part {i} is empty")
        if seen & part:
            problems.append(f"part {i} overlaps earlier parts on {sorted(seen & part)}")
        seen |= part
    missing = set(range(G.n)) - seen
    if missing:
        problems.append(f"parts do not cover the vertex set (missing {sorted(missing)})")
    stray = seen - set(range(G.n))
    if stray:
        problems.append(f"unknown vertices {sorted(stray)}")
        return problems
    for i, (part, f) in enumerate(zip(parts, fs)):
        f = _values(f, G.n)
        for v in sorted(part):
            d = sum(G.multiplicity(v, u) for u in part if u != v)
            if d < f[v]:
                problems.append(f"vertex {v} in part {i} has inner degree {d} < {f[v]}")
    return problems


def _members(mask: int, n: int) -> frozenset[int]:
    return frozenset(v for v in range(n) if mask >> v & 1)


def exists_feasible_partition(
    G: Multigraph, a: Sequence[int] | int, b: Sequence[int] | int, cap: Optional[int] = None
) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """First feasible ``(A, B)`` by enumeration, or ``None`` if there is none.

    Candidates for ``A`` are visited by increasing size, then in
    lexicographic order of their sorted vertex ids.
    """
    _check_cap(G.n, cap)
    a, b = _values(a, G.n), _values(b, G.n)
    mask = kernels.find_feasible_split(G.n, G.dense(), a, b)
    if mask < 0:
        return None
    A = _members(mask, G.n)
    return A, frozenset(G.vertices()) - A


def meager_by_enumeration(G: Multigraph, X: Iterable[int], f: Sequence[int] | int, cap: Optional[int] = None) -> bool:
    """Check f-meagerness of ``X`` over all of its nonempty subsets."""
    X = frozenset(X)
    _check_cap(len(X), cap)
    f = _values(f, G.n)
    if any(G.degrees[v] == 0 for v in X):
        raise InputError("meagerness is undefined for isolated vertices")
    xmask = sum(1 << v for v in X)
    thresh = [f[v] + G.weights[v] for v in range(G.n)]
    return kernels.find_nice_subset(G.n, G.dense(), xmask, thresh) < 0


def nice_subsets_by_enumeration(G: Multigraph, X: Iterable[int], f: Sequence[int] | int) -> list[frozenset[int]]:
    """All nonempty f-nice subsets of ``X`` (brute force, small ``X`` only)."""
    items = sorted(set(X))
    _check_cap(len(items), None)
    f = _values(f, G.n)
    out = []
    for mask in range(1, 1 << len(items)):
        Y = [items[i] for i in range(len(items)) if mask >> i & 1]
        if all(sum(G.multiplicity(v, u) for u in Y if u != v) >= f[v] for v in Y):
            out.append(frozenset(Y))
    return out


@dataclass
class SharpnessReport:
    family: str
    t: int
    n: int
    a: list[int]
    b: list[int]
    weakened_bound_holds: bool
    feasible_partition_exists: bool
    witness: Optional[list[list[int]]]

    @property
    def certified(self) -> bool:
        return self.weakened_bound_holds and not self.feasible_partition_exists

    def to_dict(self) -> dict:
        d = asdict(self)
        d["certified"] = self.certified
        return d


FAMILIES = ("tk3", "cubeH", "icosa")


def sharpness_instance(family: str, t: int) -> tuple[Multigraph, list[int], list[int]]:
    """The counter-example graph and budgets for ``family`` at scale ``t``."""
    from .generators import gen_cubeH, gen_icosahedron, gen_tk3, t_multiply

    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InputError(f"t must be a positive integer, got {t!r}")
    if family == "tk3":
        G = gen_tk3(t)
        return G, [1] * G.n, [1] * G.n
    if family == "cubeH":
        G = t_multiply(gen_cubeH(), t)
        return G, [1] * G.n, [2 * t + 1] * G.n
    if family == "icosa":
        G = t_multiply(gen_icosahedron(), t)
        return G, [1] * G.n, [3 * t + 1] * G.n
    raise InputError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def certify_sharpness(family: str, t: int) -> SharpnessReport:
    """Confirm that ``family`` meets ``d >= a + b + 2w - 2`` yet has no
    feasible partition."""
    G, a, b = sharpness_instance(family, t)
    bound = all(G.degrees[v] >= a[v] + b[v] + 2 * G.weights[v] - 2 for v in G.vertices()) and G.min_degree() >= 1
    found = exists_feasible_partition(G, a, b)
    witness = None if found is None else [sorted(found[0]), sorted(found[1])]
    return SharpnessReport(family, t, G.n, a, b, bound, found is not None, witness)
