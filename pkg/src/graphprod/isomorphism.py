"""Exact graph isomorphism by refinement-guided backtracking.

This is a desk-scale decision procedure, not a canonical-labelling engine.
Nodes are first partitioned by iterated neighborhood refinement (degree and
loop status seeded, then neighbor-color multisets to a fixed point); the
backtracker then maps nodes of the first graph onto same-color candidates of
the second, checking adjacency against all previously mapped nodes.

Candidates are tried in ascending node order inside each refinement cell and
the node processing order is itself deterministic, so a successful search
always returns the same witness for the same inputs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .core import Graph, SizeLimitError, relabel

DEFAULT_NODE_LIMIT = 16


@dataclass(frozen=True)
class IsomorphismWitness:
    """A node bijection carrying g1 onto g2: node v of g1 maps to mapping[v]."""

    mapping: tuple[int, ...]


def is_isomorphism(g1: Graph, g2: Graph, mapping: Sequence[int]) -> bool:
    """True iff ``mapping`` sends the edge set of g1 exactly onto g2's."""
    if g1.node_count != g2.node_count or len(mapping) != g1.node_count:
        return False
    if sorted(mapping) != list(range(g1.node_count)):
        return False
    return relabel(g1, list(mapping)).edges == g2.edges


def _initial_colors(g: Graph) -> list[tuple]:
    deg = [0] * g.node_count
    loop = [0] * g.node_count
    for u, v in g.edges:
        if u == v:
            loop[u] = 1
        else:
            deg[u] += 1
            deg[v] += 1
    return [(deg[v], loop[v]) for v in range(g.node_count)]


def _neighbor_lists(g: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.node_count)]
    for u, v in g.edges:
        if u != v:
            adj[u].append(v)
            adj[v].append(u)
    return adj


def _refine(g1: Graph, g2: Graph) -> tuple[list[int], list[int]] | None:
    """Joint color refinement; None if the color histograms ever diverge."""
    n = g1.node_count
    adj1, adj2 = _neighbor_lists(g1), _neighbor_lists(g2)
    sig1: list = _initial_colors(g1)
    sig2: list = _initial_colors(g2)
    colors1 = colors2 = None
    for _ in range(n + 1):
        palette = {s: i for i, s in enumerate(sorted(set(sig1) | set(sig2)))}
        new1 = [palette[s] for s in sig1]
        new2 = [palette[s] for s in sig2]
        if Counter(new1) != Counter(new2):
            return None
        if new1 == colors1 and new2 == colors2:
            break
        colors1, colors2 = new1, new2
        if len(set(colors1)) == n:
            break
        sig1 = [(colors1[v], tuple(sorted(colors1[w] for w in adj1[v]))) for v in range(n)]
        sig2 = [(colors2[v], tuple(sorted(colors2[w] for w in adj2[v]))) for v in range(n)]
    assert colors1 is not None and colors2 is not None
    return colors1, colors2


def _processing_order(adj: list[list[int]], candidates: list[list[int]]) -> list[int]:
    """Most-constrained-first order that stays connected where possible."""
    n = len(adj)
    order: list[int] = []
    placed = [False] * n
    frontier: set[int] = set()
    while len(order) < n:
        pool = frontier if frontier else set(v for v in range(n) if not placed[v])
        best = min(pool, key=lambda v: (len(candidates[v]), v))
        order.append(best)
        placed[best] = True
        frontier.discard(best)
        frontier.update(w for w in adj[best] if not placed[w])
    return order


def are_isomorphic(
    g1: Graph, g2: Graph, *, node_limit: int | None = DEFAULT_NODE_LIMIT
) -> IsomorphismWitness | None:
    """Search for an isomorphism g1 -> g2; None if the graphs differ.

    Inputs must be nonempty.  Graphs larger than ``node_limit`` raise
    :class:`SizeLimitError`; pass ``node_limit=None`` to lift the bound.
    """
    if g1.node_count == 0 or g2.node_count == 0:
        raise ValueError("isomorphism search requires nonempty graphs")
    if node_limit is not None and max(g1.node_count, g2.node_count) > node_limit:
        raise SizeLimitError(
            f"inputs exceed the {node_limit}-node bound; raise node_limit to proceed"
        )
    n = g1.node_count
    if g2.node_count != n:
        return None
    if g1.edge_count != g2.edge_count or g1.loop_count != g2.loop_count:
        return None

    refined = _refine(g1, g2)
    if refined is None:
        return None
    colors1, colors2 = refined

    cells: dict[int, list[int]] = {}
    for w in range(n):
        cells.setdefault(colors2[w], []).append(w)
    candidates = [cells.get(colors1[v], []) for v in range(n)]
    if any(not c for c in candidates):
        return None

    adj1 = _neighbor_lists(g1)
    order = _processing_order(adj1, candidates)

    m1 = [[False] * n for _ in range(n)]
    m2 = [[False] * n for _ in range(n)]
    for u, v in g1.edges:
        m1[u][v] = m1[v][u] = True
    for u, v in g2.edges:
        m2[u][v] = m2[v][u] = True

    mapping = [-1] * n
    used = [False] * n

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        row1 = m1[v]
        for w in candidates[v]:
            if used[w]:
                continue
            row2 = m2[w]
            ok = True
            for j in range(idx):
                u = order[j]
                if row1[u] != row2[mapping[u]]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(idx + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    if not extend(0):
        return None
    witness = IsomorphismWitness(tuple(mapping))
    assert is_isomorphism(g1, g2, witness.mapping)
    return witness
