"""Immutable loopless multigraphs with integer edge multiplicities."""

from __future__ import annotations

import warnings
from array import array
from collections.abc import Iterable, Mapping
from typing import Optional

from .errors import InputError

VertexSet = frozenset
"""Vertex subsets are plain frozensets of integer ids."""

# Kernels accumulate degrees in signed 64-bit integers.
_MAX_TOTAL = 2**62


class IsolatedVertexWarning(UserWarning):
    """Emitted when the weight of an isolated vertex is requested."""


class Multigraph:
    """Loopless undirected multigraph on vertices ``0..n-1``.

    Multiplicities are stored sparsely, keyed by ``(min(u, v), max(u, v))``.
    Instances are immutable after construction.
    """

    __slots__ = ("_n", "_mult", "_adj", "_degree", "_weight", "_csr", "_dense")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int] | tuple[int, int]] = ()) -> None:
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
        mult: dict[tuple[int, int], int] = {}
        for edge in edges:
            if len(edge) == 2:
                u, v = edge  # type: ignore[misc]
                k = 1
            else:
                u, v, k = edge  # type: ignore[misc]
            for x in (u, v):
                if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
                    raise InputError(f"vertex id {x!r} out of range 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u} not allowed")
            if isinstance(k, bool) or not isinstance(k, int) or k < 0:
                raise InputError(f"multiplicity must be a nonnegative integer, got {k!r}")
            if k == 0:
                continue
            key = (u, v) if u < v else (v, u)
            mult[key] = mult.get(key, 0) + k

        adj: list[dict[int, int]] = [{} for _ in range(n)]
        for (u, v), k in mult.items():
            adj[u][v] = k
            adj[v][u] = k
        degree = tuple(sum(nb.values()) for nb in adj)
        if sum(degree) >= _MAX_TOTAL:
            raise InputError("total multiplicity exceeds the supported 64-bit range")

        self._n = n
        self._mult = mult
        self._adj = tuple(adj)
        self._degree = degree
        self._weight = tuple(max(nb.values(), default=0) for nb in adj)
        self._csr: Optional[tuple[array, array, array]] = None
        self._dense: Optional[array] = None

    @classmethod
    def from_multiplicities(cls, n: int, mult: Mapping[tuple[int, int], int]) -> "Multigraph":
        return cls(n, ((u, v, k) for (u, v), k in mult.items()))

    # -- basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> list[tuple[int, int, int]]:
        """Sorted list of ``(u, v, multiplicity)`` with ``u < v``."""
        return sorted((u, v, k) for (u, v), k in self._mult.items())

    def num_edges(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(self._mult.values())

    def _check_vertex(self, v: int) -> None:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self._n:
            raise InputError(f"invalid vertex id {v!r} (graph has {self._n} vertices)")

    def multiplicity(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise InputError(f"multiplicity undefined for identical vertices ({u}, {u})")
        return self._adj[u].get(v, 0)

    def neighbors(self, v: int) -> Mapping[int, int]:
        """Read-only view ``{neighbor: multiplicity}`` of vertex ``v``."""
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._degree[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degree

    def vertex_weight(self, v: int) -> int:
        """Largest multiplicity of an edge at ``v``.

        An isolated vertex has weight 0 and triggers an
        :class:`IsolatedVertexWarning`; callers needing ``w >= 1`` should
        strip isolated vertices first.
        """
        self._check_vertex(v)
        if self._degree[v] == 0:
            warnings.warn(f"vertex {v} is isolated; its weight is taken as 0",
                          IsolatedVertexWarning, stacklevel=2)
        return self._weight[v]

    @property
    def weights(self) -> tuple[int, ...]:
        """Per-vertex weights, 0 for isolated vertices (no warning)."""
        return self._weight

    def min_degree(self) -> int:
        return min(self._degree, default=0)

    def max_multiplicity(self) -> int:
        return max(self._mult.values(), default=0)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self._n) if self._degree[v] == 0]

    def degree_into(self, v: int, X: Iterable[int]) -> int:
        """Degree of ``v`` in ``G[X | {v}]``; ``v`` may or may not lie in ``X``."""
        self._check_vertex(v)
        nb = self._adj[v]
        if not isinstance(X, (set, frozenset)):
            X = set(X)
        if len(X) < len(nb):
            return sum(nb.get(u, 0) for u in X if u != v)
        return sum(k for u, k in nb.items() if u in X)

    def edges_within(self, X: Iterable[int]) -> int:
        """Number of edges (with multiplicity) with both ends in ``X``."""
        X = frozenset(X)
        for v in X:
            self._check_vertex(v)
        return sum(k for u in X for w, k in self._adj[u].items() if w in X and u < w)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._n == other._n and self._mult == other._mult

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._mult.items())))

    def __repr__(self) -> str:
        return f"Multigraph(n={self._n}, edges={self.num_edges()}, mu={self.max_multiplicity()})"

    # -- structure ----------------------------------------------------------

    def common_neighbors(self, u: int, v: int) -> list[int]:
        nu, nv = self._adj[u], self._adj[v]
        if len(nu) > len(nv):
            nu, nv = nv, nu
        return sorted(w for w in nu if w in nv)

    def k4minus_witness(self) -> Optional[tuple[int, int, int, int]]:
        """Return ``(u, v, w1, w2)`` where edge ``uv`` has common neighbors
        ``w1 < w2``, or ``None`` if the graph is K4^- free."""
        for u, v, _ in self.edges():
            common = self.common_neighbors(u, v)
            if len(common) >= 2:
                return (u, v, common[0], common[1])
        return None

    def is_k4minus_free(self) -> bool:
        return self.k4minus_witness() is None

    def triangle_witness(self) -> Optional[tuple[int, int, int]]:
        for u, v, _ in self.edges():
            common = self.common_neighbors(u, v)
            if common:
                return (u, v, common[0])
        return None

    def is_triangle_free(self) -> bool:
        return self.triangle_witness() is None

    def induced_subgraph(self, X: Iterable[int]) -> tuple["Multigraph", list[int]]:
        """Induced subgraph on ``X`` relabelled to ``0..|X|-1``.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        keep = sorted(set(X))
        for v in keep:
            self._check_vertex(v)
        index = {old: new for new, old in enumerate(keep)}
        edges = [
            (index[u], index[v], k)
            for (u, v), k in self._mult.items()
            if u in index and v in index
        ]
        return Multigraph(len(keep), edges), keep

    def strip_isolated(self) -> tuple["Multigraph", list[int]]:
        """Drop isolated vertices; returns the reduced graph and removed ids.

        Returns ``self`` unchanged when nothing is isolated.
        """
        removed = self.isolated_vertices()
        if not removed:
            return self, []
        sub, _ = self.induced_subgraph(v for v in range(self._n) if self._degree[v] > 0)
        return sub, removed

    def scaled(self, t: int) -> "Multigraph":
        """Copy with every multiplicity multiplied by ``t``."""
        if isinstance(t, bool) or not isinstance(t, int) or t < 1:
            raise InputError(f"scale factor must be a positive integer, got {t!r}")
        return Multigraph(self._n, ((u, v, k * t) for (u, v), k in self._mult.items()))

    # -- kernel views -------------------------------------------------------

    def csr(self) -> tuple[array, array, array]:
        """Compressed adjacency ``(indptr, indices, mults)`` as int64 arrays."""
        if self._csr is None:
            indptr = array("q", [0])
            indices = array("q")
            mults = array("q")
            for nb in self._adj:
                for u in sorted(nb):
                    indices.append(u)
                    mults.append(nb[u])
                indptr.append(len(indices))
            self._csr = (indptr, indices, mults)
        return self._csr

    def dense(self) -> array:
        """Row-major ``n*n`` multiplicity matrix as an int64 array."""
        if self._dense is None:
            n = self._n
            mat = array("q", bytes(8 * n * n))
            for (u, v), k in self._mult.items():
                mat[u * n + v] = k
                mat[v * n + u] = k
            self._dense = mat
        return self._dense

