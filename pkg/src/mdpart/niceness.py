"""Per-vertex degree budgets and peeling-based nice/meager/degenerate tests.

A set ``X`` is *f-nice* when every ``v`` in ``X`` has at least ``f(v)``
incident edges inside ``X``.  Nice subsets are closed under union, so every
set has a unique largest nice subset, found by repeatedly deleting violators.
Meagerness and degeneracy then reduce to "the largest nice subset for a
shifted budget is empty".
"""

from __future__ import annotations

from array import array
from collections.abc import Iterable, Iterator, Sequence
from typing import Optional, Union

from . import kernels
from .errors import InputError
from .multigraph import Multigraph


class DegreeFunction(Sequence[int]):
    """Immutable integer budget indexed by vertex id.

    Values are normally nonnegative.  Arithmetic results that drop below
    ``floor`` (default 0) raise instead of being clamped; pass ``floor=-1``
    to represent ``b - 1`` with ``b >= 0`` exactly.
    """

    __slots__ = ("_values", "_floor")

    def __init__(self, values: Iterable[int], floor: int = 0) -> None:
        vals = tuple(values)
        for i, x in enumerate(vals):
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputError(f"budget at vertex {i} must be an integer, got {x!r}")
            if x < floor:
                raise InputError(f"budget at vertex {i} is {x}, below the floor {floor}")
        self._values = vals
        self._floor = floor

    @classmethod
    def constant(cls, n: int, c: int) -> "DegreeFunction":
        return cls([c] * n)

    @classmethod
    def coerce(cls, f: Union["DegreeFunction", Iterable[int], int], n: int) -> "DegreeFunction":
        """Accept a DegreeFunction, an int (constant) or a sequence of length ``n``."""
        if isinstance(f, DegreeFunction):
            out = f
        elif isinstance(f, int) and not isinstance(f, bool):
            out = cls.constant(n, f)
        else:
            out = cls(f)
        if len(out) != n:
            raise InputError(f"budget has {len(out)} entries, graph has {n} vertices")
        return out

    @property
    def floor(self) -> int:
        return self._floor

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, v):  # type: ignore[override]
        return self._values[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self._values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DegreeFunction):
            return self._values == other._values
        if isinstance(other, (tuple, list)):
            return self._values == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._values)

    def __repr__(self) -> str:
        return f"DegreeFunction({list(self._values)})"

    def _combine(self, other: Union["DegreeFunction", Sequence[int], int], sign: int, floor: int) -> "DegreeFunction":
        if isinstance(other, int):
            return DegreeFunction((x + sign * other for x in self._values), floor)
        if len(other) != len(self):
            raise InputError("budgets of different lengths")
        return DegreeFunction((x + sign * y for x, y in zip(self._values, other)), floor)

    def __add__(self, other: Union["DegreeFunction", Sequence[int], int]) -> "DegreeFunction":
        return self._combine(other, 1, min(self._floor, getattr(other, "floor", 0)))

    __radd__ = __add__

    def minus(self, other: Union["DegreeFunction", Sequence[int], int], floor: int = 0) -> "DegreeFunction":
        """Pointwise difference; raises if any value falls below ``floor``."""
        return self._combine(other, -1, floor)

    def __sub__(self, other: Union["DegreeFunction", Sequence[int], int]) -> "DegreeFunction":
        return self.minus(other, floor=0)

    def min(self) -> int:
        return min(self._values, default=0)

    def as_array(self) -> array:
        return array("q", self._values)


def _mask(G: Multigraph, X: Iterable[int]) -> bytearray:
    member = bytearray(G.n)
    for v in X:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < G.n:
            raise InputError(f"vertex id {v!r} out of range")
        member[v] = 1
    return member


def _budget(G: Multigraph, f: Union[DegreeFunction, Sequence[int], int]) -> DegreeFunction:
    if isinstance(f, DegreeFunction):
        if len(f) != G.n:
            raise InputError(f"budget has {len(f)} entries, graph has {G.n} vertices")
        return f
    if isinstance(f, int) and not isinstance(f, bool):
        return DegreeFunction([f] * G.n, floor=min(f, 0))
    vals = list(f)
    return DegreeFunction.coerce(DegreeFunction(vals, floor=min(vals, default=0)), G.n)


def is_nice(G: Multigraph, X: Iterable[int], f: Union[DegreeFunction, Sequence[int], int]) -> bool:
    """Direct check that every member of ``X`` meets its budget inside ``X``."""
    X = frozenset(X)
    f = _budget(G, f)
    return all(G.degree_into(v, X) >= f[v] for v in X)


def maximal_nice_subset(G: Multigraph, X: Iterable[int], f: Union[DegreeFunction, Sequence[int], int]) -> frozenset[int]:
    """Largest ``Y`` within ``X`` with ``d_Y(v) >= f(v)`` for all ``v`` in ``Y``."""
    member = _mask(G, X)
    f = _budget(G, f)
    indptr, indices, mults = G.csr()
    alive = kernels.peel(indptr, indices, mults, member, f.as_array())
    return frozenset(v for v in range(G.n) if alive[v])


def _require_non_isolated(G: Multigraph, X: frozenset[int]) -> None:
    bad = sorted(v for v in X if G.degrees[v] == 0)
    if bad:
        raise InputError(f"meagerness is undefined for isolated vertices {bad}")


def is_meager(G: Multigraph, X: Iterable[int], f: Union[DegreeFunction, Sequence[int], int]) -> bool:
    """True iff every nonempty ``Y`` within ``X`` has a vertex with
    ``d_Y(v) <= f(v) + w(v) - 1``, i.e. ``X`` holds no ``(f + w)``-nice set."""
    X = frozenset(X)
    _require_non_isolated(G, X)
    f = _budget(G, f)
    return not maximal_nice_subset(G, X, f + G.weights)


def meager_violator(G: Multigraph, X: Iterable[int], f: Union[DegreeFunction, Sequence[int], int]) -> frozenset[int]:
    """The largest ``(f + w)``-nice subset of ``X``; empty iff ``X`` is f-meager."""
    X = frozenset(X)
    _require_non_isolated(G, X)
    return maximal_nice_subset(G, X, _budget(G, f) + G.weights)


def is_degenerate(G: Multigraph, X: Iterable[int], f: Union[DegreeFunction, Sequence[int], int]) -> bool:
    """True iff every nonempty ``Y`` within ``X`` has ``v`` with ``d_Y(v) <= f(v)``."""
    return not maximal_nice_subset(G, X, _budget(G, f) + 1)


def minimal_nice_subset(
    G: Multigraph, X: Iterable[int], f: Union[DegreeFunction, Sequence[int], int]
) -> Optional[frozenset[int]]:
    """A nonempty f-nice subset of ``X`` none of whose proper nonempty
    subsets is f-nice, or ``None`` if ``X`` has no nonempty f-nice subset.

    Starting from the largest nice subset, try deleting each vertex in
    increasing id order and re-peel; keep any nonempty result.  A vertex whose
    deletion empties the peel can be skipped for good, since shrinking the
    current set only shrinks later peels.
    """
    f = _budget(G, f)
    current = maximal_nice_subset(G, X, f)
    if not current:
        return None
    for v in sorted(current):
        if v not in current:
            continue
        candidate = maximal_nice_subset(G, current - {v}, f)
        if candidate:
            current = candidate
    return current
