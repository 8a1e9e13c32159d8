"""Core graph type, predicates, and edge-list I/O.

Graphs are finite and undirected, with self-loops allowed.  Nodes are the
integers ``0..node_count-1`` and an edge is an unordered pair stored as
``(min(u, v), max(u, v))``; ``(v, v)`` is a self-loop.

Counting and adjacency conventions used throughout the package:

* ``m`` is the number of edges, where a self-loop counts as ONE edge;
* ``s`` is the number of self-loops;
* a self-loop writes a SINGLE 1 on the matrix diagonal, so the adjacency
  matrix of a graph has exactly ``2*m - s`` nonzero entries.

Every counting argument in :mod:`graphprod.factorization` and
:mod:`graphprod.reduction` depends on the ``2*m - s`` rule; do not change it.

Optional per-node labels are opaque strings carried for I/O convenience and
ignored by every algorithm.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

Edge = tuple[int, int]


class GraphProdError(Exception):
    """Base class for errors raised by this package."""


class SizeLimitError(GraphProdError):
    """An input exceeds a configured node bound."""


class PreconditionError(GraphProdError):
    """An operation's stated precondition does not hold for the input.

    ``report`` optionally carries a structured explanation (for instance a
    class membership report).
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class EdgeListParseError(GraphProdError):
    """Malformed edge-list text; ``line`` is the offending 1-based line.

    A nonpositive ``line`` marks input that is not file-positional (for
    instance a malformed environment override).
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}" if line > 0 else message)
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph on nodes ``0..node_count-1``.

    ``edges`` may be given with endpoints in either order; they are
    normalized to ``(min, max)`` tuples on construction.
    """

    node_count: int
    edges: frozenset[Edge] = field(default_factory=frozenset)
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.node_count
        if n < 0:
            raise ValueError("node_count must be nonnegative")
        normalized = set()
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} nodes")
            normalized.add((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != n:
                raise ValueError("labels length must equal node_count")
            object.__setattr__(self, "labels", labels)

    @property
    def edge_count(self) -> int:
        """m, counting each self-loop as one edge."""
        return len(self.edges)

    @property
    def loop_count(self) -> int:
        """s, the number of self-loops."""
        return sum(1 for u, v in self.edges if u == v)

    @property
    def nonzero_count(self) -> int:
        """Number of nonzero adjacency entries, always 2*m - s."""
        return 2 * self.edge_count - self.loop_count

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u <= v else (v, u)) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph({self.node_count}, {self.sorted_edges()})"


def relabel(g: Graph, mapping: Sequence[int]) -> Graph:
    """Apply a node bijection: node v of ``g`` becomes ``mapping[v]``."""
    n = g.node_count
    if len(mapping) != n or sorted(mapping) != list(range(n)):
        raise ValueError("mapping must be a permutation of 0..n-1")
    edges = {(mapping[u], mapping[v]) for u, v in g.edges}
    labels = None
    if g.labels is not None:
        out = [""] * n
        for old, new in enumerate(mapping):
            out[new] = g.labels[old]
        labels = tuple(out)
    return Graph(n, frozenset(edges), labels)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; nodes of ``g2`` are shifted up by ``g1.node_count``."""
    n1 = g1.node_count
    edges = set(g1.edges)
    edges.update((u + n1, v + n1) for u, v in g2.edges)
    labels = None
    if g1.labels is not None and g2.labels is not None:
        labels = g1.labels + g2.labels
    return Graph(n1 + g2.node_count, frozenset(edges), labels)


def _adjacency_sets(g: Graph) -> list[set[int]]:
    """Neighbor sets ignoring self-loops (used for traversals)."""
    adj: list[set[int]] = [set() for _ in range(g.node_count)]
    for u, v in g.edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def is_connected(g: Graph) -> bool:
    """True iff every node is reachable from node 0.  Rejects empty graphs."""
    if g.node_count == 0:
        raise ValueError("connectivity is undefined for the empty graph")
    adj = _adjacency_sets(g)
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.node_count


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted node lists, ordered by smallest node."""
    adj = _adjacency_sets(g)
    seen = [False] * g.node_count
    comps = []
    for start in range(g.node_count):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def induced_subgraph(g: Graph, nodes: Sequence[int]) -> Graph:
    """Subgraph on ``nodes``, renumbered by their position in the sequence."""
    index = {v: i for i, v in enumerate(nodes)}
    if len(index) != len(nodes):
        raise ValueError("nodes must be distinct")
    edges = {
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    }
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[v] for v in nodes)
    return Graph(len(nodes), frozenset(edges), labels)


def bipartition(g: Graph) -> list[int] | None:
    """A proper 2-coloring as a 0/1 list, or None if none exists.

    Any self-loop is an odd cycle of length one, so loopy graphs are never
    bipartite.
    """
    if g.loop_count > 0:
        return None
    adj = _adjacency_sets(g)
    color = [-1] * g.node_count
    for start in range(g.node_count):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    """True iff the graph admits a proper 2-coloring."""
    return bipartition(g) is not None


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Symmetric 0/1 matrix; a self-loop is a single 1 on the diagonal."""
    n = g.node_count
    mat = np.zeros((n, n), dtype=np.uint8)
    for u, v in g.edges:
        mat[u, v] = 1
        mat[v, u] = 1
    return mat


def graph_from_adjacency(mat: np.ndarray, labels: Sequence[str] | None = None) -> Graph:
    """Inverse of :func:`adjacency_matrix`; validates symmetry and 0/1 entries."""
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("adjacency matrix must be square")
    if not np.array_equal(mat, mat.T):
        raise ValueError("adjacency matrix must be symmetric")
    if not np.isin(mat, (0, 1)).all():
        raise ValueError("adjacency entries must be 0 or 1")
    n = mat.shape[0]
    edges = {(int(u), int(v)) for u, v in zip(*np.nonzero(mat)) if u <= v}
    return Graph(n, frozenset(edges), tuple(labels) if labels is not None else None)


# --- edge-list text format -------------------------------------------------
#
# line 1:               "n m"
# following m lines:    "u v"   (0-based, "u u" for a self-loop)
# "#" begins a comment line; blank lines are not allowed inside the body.
# Writers emit edges sorted by (min, max).


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text; raises :class:`EdgeListParseError` on bad input."""
    header: tuple[int, int] | None = None
    edges: set[Edge] = set()
    expected = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise EdgeListParseError("header must be 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListParseError("header must hold two integers", lineno) from None
            if n < 0 or m < 0:
                raise EdgeListParseError("counts must be nonnegative", lineno)
            header = (n, m)
            expected = m
            continue
        if len(edges) == expected:
            raise EdgeListParseError("more edge lines than the header announced", lineno)
        if len(parts) != 2:
            raise EdgeListParseError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError("edge endpoints must be integers", lineno) from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"endpoint out of range 0..{n - 1}", lineno)
        edge = (u, v) if u <= v else (v, u)
        if edge in edges:
            raise EdgeListParseError(f"duplicate edge {edge}", lineno)
        edges.add(edge)
    if header is None:
        raise EdgeListParseError("missing 'n m' header", 1)
    if len(edges) != expected:
        raise EdgeListParseError(
            f"header announced {expected} edges, found {len(edges)}", 1
        )
    return Graph(header[0], frozenset(edges))


def format_edge_list(g: Graph) -> str:
    """Canonical edge-list text for ``g`` (edges sorted by (min, max))."""
    lines = [f"{g.node_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
