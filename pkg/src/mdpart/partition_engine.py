"""Bipartition state, the (a,b)-weight potential and single-vertex moves.

The potential of a bipartition ``(A, B)`` is::

    w(A, B) = |E(A)| + |E(B)| + sum(b(v) for v in A) + sum(a(v) for v in B)

Moving ``x`` from ``A`` to ``B`` changes it by
``d_B(x) - d_A(x) + a(x) - b(x)``; moving ``y`` from ``B`` to ``A`` by
``d_A(y) - d_B(y) + b(y) - a(y)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Union

from .errors import InputError, InvariantError, StateError
from .multigraph import Multigraph
from .niceness import DegreeFunction, is_nice

BudgetLike = Union[DegreeFunction, Sequence[int], int]


def partition_weight(G: Multigraph, A: Iterable[int], B: Iterable[int], a: Sequence[int], b: Sequence[int]) -> int:
    """The (a,b)-weight computed from scratch."""
    A, B = frozenset(A), frozenset(B)
    return G.edges_within(A) + G.edges_within(B) + sum(b[v] for v in A) + sum(a[v] for v in B)


class PartitionState:
    """A bipartition ``(A, B)`` of ``V(G)`` with cached side degrees and weight.

    The public ``move_to_b`` / ``move_to_a`` return new states and leave the
    receiver untouched.  The underscore variants mutate in place and are
    meant for search loops that own their state.
    """

    __slots__ = ("G", "a", "b", "in_a", "dA", "dB", "weight", "size_a")

    def __init__(self, G: Multigraph, A: Iterable[int], a: BudgetLike, b: BudgetLike) -> None:
        n = G.n
        self.G = G
        self.a = DegreeFunction.coerce(a, n)
        self.b = DegreeFunction.coerce(b, n)
        in_a = [False] * n
        for v in A:
            if not 0 <= v < n:
                raise InputError(f"vertex id {v!r} out of range")
            in_a[v] = True
        size_a = sum(in_a)
        if size_a == 0 or size_a == n:
            raise StateError("both sides of a partition must be nonempty")
        self.in_a = in_a
        self.size_a = size_a
        dA = [0] * n
        dB = [0] * n
        for v in range(n):
            for u, k in G.neighbors(v).items():
                if in_a[u]:
                    dA[v] += k
                else:
                    dB[v] += k
        self.dA = dA
        self.dB = dB
        self.weight = partition_weight(G, self.A, self.B, self.a, self.b)

    @classmethod
    def from_sides(cls, G: Multigraph, A: Iterable[int], B: Iterable[int], a: BudgetLike, b: BudgetLike) -> "PartitionState":
        A, B = frozenset(A), frozenset(B)
        if A & B or (A | B) != frozenset(G.vertices()):
            raise InputError("A and B must partition the vertex set")
        return cls(G, A, a, b)

    def copy(self) -> "PartitionState":
        new = object.__new__(PartitionState)
        new.G, new.a, new.b = self.G, self.a, self.b
        new.in_a = self.in_a.copy()
        new.dA = self.dA.copy()
        new.dB = self.dB.copy()
        new.weight = self.weight
        new.size_a = self.size_a
        return new

    @property
    def A(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.in_a) if s)

    @property
    def B(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.in_a) if not s)

    @property
    def size_b(self) -> int:
        return self.G.n - self.size_a

    def delta_to_b(self, x: int) -> int:
        return self.dB[x] - self.dA[x] + self.a[x] - self.b[x]

    def delta_to_a(self, y: int) -> int:
        return self.dA[y] - self.dB[y] + self.b[y] - self.a[y]

    def _move(self, v: int, to_a: bool) -> int:
        if self.in_a[v] == to_a:
            side = "A" if to_a else "B"
            raise InputError(f"vertex {v} is already in {side}")
        if to_a:
            if self.size_b < 2:
                raise StateError(f"moving {v} would empty side B")
            delta = self.delta_to_a(v)
        else:
            if self.size_a < 2:
                raise StateError(f"moving {v} would empty side A")
            delta = self.delta_to_b(v)
        self.in_a[v] = to_a
        self.size_a += 1 if to_a else -1
        for u, k in self.G.neighbors(v).items():
            if to_a:
                self.dA[u] += k
                self.dB[u] -= k
            else:
                self.dA[u] -= k
                self.dB[u] += k
        self.weight += delta
        return delta

    def _move_to_b(self, x: int) -> int:
        return self._move(x, to_a=False)

    def _move_to_a(self, y: int) -> int:
        return self._move(y, to_a=True)

    def move_to_b(self, x: int) -> "PartitionState":
        new = self.copy()
        new._move_to_b(x)
        return new

    def move_to_a(self, y: int) -> "PartitionState":
        new = self.copy()
        new._move_to_a(y)
        return new

    def recomputed_weight(self) -> int:
        return partition_weight(self.G, self.A, self.B, self.a, self.b)

    def check_caches(self) -> None:
        """Raise InvariantError unless every cache matches a recomputation."""
        A, B = self.A, self.B
        for v in self.G.vertices():
            if self.dA[v] != self.G.degree_into(v, A) or self.dB[v] != self.G.degree_into(v, B):
                raise InvariantError(f"stale side degree at vertex {v}")
        if self.weight != self.recomputed_weight():
            raise InvariantError("stale cached weight")
        if self.size_a != len(A):
            raise InvariantError("stale |A|")


def move_to_B(state: PartitionState, x: int) -> PartitionState:
    """New state with ``x`` moved from ``A`` to ``B``."""
    return state.move_to_b(x)


def move_to_A(state: PartitionState, y: int) -> PartitionState:
    """New state with ``y`` moved from ``B`` to ``A``."""
    return state.move_to_a(y)


@dataclass(frozen=True)
class MoveRecord:
    kind: str
    vertices: tuple[int, ...]
    weight_before: int
    weight_after: int
    size_a_before: int
    size_a_after: int

    def to_line(self) -> str:
        verts = ",".join(map(str, self.vertices))
        return (f"MOVE {self.kind} {verts} w:{self.weight_before}->{self.weight_after} "
                f"|A|:{self.size_a_before}->{self.size_a_after}")

    @classmethod
    def from_line(cls, line: str) -> "MoveRecord":
        try:
            tag, kind, verts, w, sa = line.split()
            if tag != "MOVE" or not w.startswith("w:") or not sa.startswith("|A|:"):
                raise ValueError
            wb, wa = w[2:].split("->")
            sb, sa2 = sa[4:].split("->")
            return cls(kind, tuple(int(x) for x in verts.split(",")), int(wb), int(wa), int(sb), int(sa2))
        except ValueError:
            raise InputError(f"malformed trace line {line!r}") from None


@dataclass
class SearchTrace:
    """Ordered log of the moves a search applied."""

    records: list[MoveRecord] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def record(self, kind: str, vertices: Sequence[int], state: PartitionState, weight_before: int, size_a_before: int) -> MoveRecord:
        rec = MoveRecord(kind, tuple(vertices), weight_before, state.weight, size_a_before, state.size_a)
        self.records.append(rec)
        return rec

    def to_text(self) -> str:
        return "".join(r.to_line() + "\n" for r in self.records)

    @classmethod
    def from_text(cls, text: str) -> "SearchTrace":
        return cls([MoveRecord.from_line(line) for line in text.splitlines() if line.strip()])

    def replay(self, initial: PartitionState) -> PartitionState:
        """Re-apply the moves to a copy of ``initial``, checking every logged
        weight and |A| against the recomputed state."""
        state = initial.copy()
        for rec in self.records:
            if (state.weight, state.size_a) != (rec.weight_before, rec.size_a_before):
                raise InvariantError(f"trace diverges before {rec.to_line()}")
            for v in rec.vertices:
                if rec.kind.startswith("to_a"):
                    state._move_to_a(v)
                else:
                    state._move_to_b(v)
            if state.weight != state.recomputed_weight():
                raise InvariantError("replayed weight differs from recomputation")
            if (state.weight, state.size_a) != (rec.weight_after, rec.size_a_after):
                raise InvariantError(f"trace diverges after {rec.to_line()}")
        return state


def extend_feasible_pair(
    G: Multigraph,
    A0: Iterable[int],
    B0: Iterable[int],
    a: BudgetLike,
    b: BudgetLike,
) -> tuple[frozenset[int], frozenset[int]]:
    """Grow a feasible pair ``(A0, B0)`` into a feasible partition.

    Requires ``A0`` a-nice, ``B0`` b-nice, disjoint and nonempty, no isolated
    vertices and ``d(v) >= a(v) + b(v) + 2 w(v) - 3`` everywhere.  Leftover
    vertices go to ``B`` unless one of them falls short of its b-budget
    there, in which case the degree bound guarantees it fits in ``A``; the
    smallest such vertex moves to ``A`` and the check repeats.
    """
    a = DegreeFunction.coerce(a, G.n)
    b = DegreeFunction.coerce(b, G.n)
    A, B = set(A0), frozenset(B0)
    if not A or not B:
        raise InputError("feasible pair sides must be nonempty")
    if A & B:
        raise InputError("feasible pair sides must be disjoint")
    if G.min_degree() < 1:
        raise InputError(f"graph has isolated vertices {G.isolated_vertices()}")
    bad = [v for v in G.vertices() if G.degrees[v] < a[v] + b[v] + 2 * G.weights[v] - 3]
    if bad:
        raise InputError(f"degree bound d >= a + b + 2w - 3 fails at vertices {bad}")
    if not is_nice(G, A, a):
        raise InputError("A0 is not a-nice")
    if not is_nice(G, B, b):
        raise InputError("B0 is not b-nice")

    rest = set(G.vertices()) - A - B
    while rest:
        side = B | rest
        short = next((v for v in sorted(rest) if G.degree_into(v, side) < b[v]), None)
        if short is None:
            B = frozenset(side)
            rest = set()
            break
        if G.degree_into(short, A) < a[short]:
            raise InvariantError(f"vertex {short} fits neither side")
        A.add(short)
        rest.discard(short)
    return frozenset(A), frozenset(B)
