"""Reading and writing the plain-text edge-list format.

::

    # comment
    n 4
    0 1 3      # u v multiplicity
    1 2        # multiplicity defaults to 1

Repeated pairs accumulate multiplicity.
"""

from __future__ import annotations

import hashlib
from typing import TextIO

from .errors import ParseError
from .multigraph import Multigraph


def parse_edge_list(text: str) -> Multigraph:
    n: int | None = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise ParseError(f"expected header 'n <count>', got {line!r}", lineno)
            n = _int(fields[1], lineno, "vertex count")
            if n < 0:
                raise ParseError("vertex count must be nonnegative", lineno)
            continue
        if len(fields) not in (2, 3):
            raise ParseError(f"expected 'u v [k]', got {line!r}", lineno)
        u = _int(fields[0], lineno, "vertex id")
        v = _int(fields[1], lineno, "vertex id")
        k = _int(fields[2], lineno, "multiplicity") if len(fields) == 3 else 1
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}: {line!r}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u} not allowed", lineno)
        if k < 1:
            raise ParseError(f"multiplicity must be >= 1, got {k}", lineno)
        edges.append((u, v, k))
    if n is None:
        raise ParseError("missing header 'n <count>'")
    return Multigraph(n, edges)


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"invalid {what} {token!r}", lineno) from None


def read_edge_list(stream: TextIO) -> Multigraph:
    return parse_edge_list(stream.read())


def format_edge_list(G: Multigraph, comment: str | None = None) -> str:
    """Canonical text: header, then one ``u v k`` line per pair, sorted."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {G.n}")
    lines.extend(f"{u} {v} {k}" for u, v, k in G.edges())
    return "\n".join(lines) + "\n"


def graph_digest(G: Multigraph) -> str:
    """SHA-256 of the canonical edge-list text."""
    return hashlib.sha256(format_edge_list(G).encode()).hexdigest()
